#pragma once
// Signed exceptional sequences, the bijection with ordered cluster tilting
// sets in both directions, sequence enumeration and permutation moves.

#include "cmcat/cluster.hpp"

namespace cmcat {

struct SeqCheck {
  bool ok = false;
  std::string reason;  // empty when ok
};

// (X_1, ..., X_k) is a signed exceptional sequence of A when X_k is a
// cluster object of A and (X_1, ..., X_{k-1}) is one of the right
// perpendicular category of X_k, recursively.
SeqCheck check_signed_exc_seq(const WideSubcat& A,
                              const std::vector<ClusterObject>& items);

// The bijection onto ordered cluster tilting sets: T_k = X_k and
// T_{j} = sigma_{T_{j+1},...,T_k}(X_j), right to left.
std::vector<ClusterObject> theta(const WideSubcat& A,
                                 const std::vector<ClusterObject>& seq);

// Right twist: w_j = v_j + correction in the span of the later v_i, chosen
// so that <v_i, w_j> = 0 for all i > j. Throws DegenerateInput when a
// trailing Gram system is singular and IntegralityViolation when a result
// is not an integer vector.
std::vector<DimVec> right_twist(const QuiverSpec& q,
                                const std::vector<DimVec>& vectors);

// Inverse bijection, computed by the right twist of the dimension vectors.
std::vector<ClusterObject> theta_inverse(const WideSubcat& A,
                                         const std::vector<ClusterObject>& T);

// Reorders an unordered partial cluster tilting set into a valid signed
// exceptional sequence (first valid permutation in lexicographic order).
std::vector<ClusterObject> schofield_order(const WideSubcat& A,
                                           std::vector<ClusterObject> T);

struct PermuteOutcome {
  bool ok = false;
  // Original sequence positions of the offending transposed pair when not ok.
  int bad_i = -1, bad_j = -1;
  std::vector<ClusterObject> seq;
};

// Applies out[l] = seq[perm[l]]; legal when every transposed pair is
// hom- and ext-orthogonal in both directions.
PermuteOutcome permute_seq(const WideSubcat& A,
                           const std::vector<ClusterObject>& seq,
                           const std::vector<int>& perm);

// All signed exceptional sequences of length k, sorted lexicographically by
// their signed dimension vector serialization.
std::vector<std::vector<ClusterObject>> enumerate_signed_seqs(
    const WideSubcat& A, int k);

}  // namespace cmcat
