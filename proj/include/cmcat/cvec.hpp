#pragma once
// c-vectors of ordered complete cluster tilting sets, the exchange-matrix
// versus bijection cross-check, good orderings, and the hom-orthogonality
// characterization of c-vector collections.

#include "cmcat/exseq.hpp"

namespace cmcat {

struct CVectors {
  std::vector<DimVec> local;    // sub-quiver coordinates of the subcategory
  std::vector<DimVec> ambient;  // the same vectors in ambient coordinates
};

// Defined by <dim T_i, beta_j> = -f_i * delta_ij with f_i = <dim T_i, dim T_i>,
// solved exactly in sub-quiver coordinates. Each c-vector is plus or minus a
// positive root; c_j equals the negated dimension vector of the j-th term of
// theta_inverse(T), so its sign tracks that term's shift flag.
CVectors c_vectors(const WideSubcat& A, const std::vector<ClusterObject>& T);

struct ExchangeVerdict {
  bool ordering_ok = false;  // <dim T_i, dim T_j> = 0 for all i < j
  int bad_i = -1, bad_j = -1;
  bool equality_ok = false;  // c-vectors match the negated theta-inverse dims
  int bad_slot = -1;
};

ExchangeVerdict check_exchange_equals_bijective(
    const WideSubcat& A, const std::vector<ClusterObject>& T);

// First permutation (lexicographically, as indices into the sorted set)
// ordering T so that <dim T_{p(i)}, dim T_{p(j)}> = 0 for all i < j.
std::vector<int> good_permutation(const WideSubcat& A,
                                  const std::vector<ClusterObject>& T);

// Whether the given vectors are the c-vectors of some ordered cluster
// tilting set: some permutation of the objects with dim X = -c forms a
// signed exceptional sequence with the shifted objects a hom-orthogonal
// prefix and the modules a hom-orthogonal suffix. Brute force.
bool speyer_thomas_check(const WideSubcat& A, const std::vector<DimVec>& cvecs);

}  // namespace cmcat
