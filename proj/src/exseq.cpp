#include "cmcat/exseq.hpp"

#include <numeric>

#include "cmcat/linalg.hpp"

namespace cmcat {

SeqCheck check_signed_exc_seq(const WideSubcat& A,
                              const std::vector<ClusterObject>& items) {
  SeqCheck r;
  const int k = (int)items.size();
  if (k > A.rank()) {
    r.reason = "sequence longer than the rank of the subcategory";
    return r;
  }
  WideSubcat cur = A;
  for (int j = k - 1; j >= 0; --j) {
    const auto& objs = cluster_objects(cur);
    if (!std::binary_search(objs.begin(), objs.end(), items[j])) {
      r.reason = "entry " + std::to_string(j + 1) + " (" +
                 vec_str(items[j].dim()) +
                 ") is not a cluster object of its perpendicular category";
      return r;
    }
    if (j > 0) cur = perp_category(cur, {items[j]});
  }
  r.ok = true;
  return r;
}

std::vector<ClusterObject> theta(const WideSubcat& A,
                                 const std::vector<ClusterObject>& seq) {
  SeqCheck chk = check_signed_exc_seq(A, seq);
  if (!chk.ok) fail("ConsistencyError", chk.reason);
  const int k = (int)seq.size();
  std::vector<ClusterObject> T(k);
  for (int j = k - 1; j >= 0; --j) {
    if (j == k - 1) {
      T[j] = seq[j];
      continue;
    }
    std::vector<ClusterObject> tail(T.begin() + j + 1, T.end());
    T[j] = sigma(A, tail, seq[j]);
  }
  return T;
}

std::vector<DimVec> right_twist(const QuiverSpec& q,
                                const std::vector<DimVec>& vectors) {
  const int k = (int)vectors.size();
  for (const auto& v : vectors) {
    if ((int)v.size() != q.n)
      fail("DimensionMismatch", "vector length does not match the quiver");
  }
  std::vector<DimVec> out(k);
  for (int j = 0; j < k; ++j) {
    const int m = k - 1 - j;  // number of later vectors
    // Solve sum_{l>j} c_l <v_i, v_l> = -<v_i, v_j> for all i > j.
    RatMat G(m, RatVec(m));
    RatVec rhs(m);
    for (int a = 0; a < m; ++a) {
      const DimVec& vi = vectors[j + 1 + a];
      for (int b = 0; b < m; ++b)
        G[a][b] = Rat(euler_form(q, vi, vectors[j + 1 + b]));
      rhs[a] = Rat(-euler_form(q, vi, vectors[j]));
    }
    if (m > 0 && det_rational(G) == Rat(0))
      fail("DegenerateInput",
           "trailing Gram system at position " + std::to_string(j + 1) +
               " is singular");
    RatVec c;
    if (!solve_rational(std::move(G), std::move(rhs), c))
      fail("DegenerateInput",
           "trailing Gram system at position " + std::to_string(j + 1) +
               " is inconsistent");
    RatVec w(q.n, Rat(0));
    for (int t = 0; t < q.n; ++t) {
      w[t] = Rat(vectors[j][t]);
      for (int b = 0; b < m; ++b) w[t] += c[b] * Rat(vectors[j + 1 + b][t]);
    }
    if (!is_integral(w))
      fail("IntegralityViolation",
           "twist output at position " + std::to_string(j + 1) +
               " is not an integer vector");
    DimVec wi(q.n);
    for (int t = 0; t < q.n; ++t) wi[t] = w[t].numerator();
    out[j] = std::move(wi);
  }
  return out;
}

std::vector<ClusterObject> theta_inverse(const WideSubcat& A,
                                         const std::vector<ClusterObject>& T) {
  // The set must be a partial cluster tilting set; order matters for the
  // twist, so only validate, never re-sort.
  std::vector<ClusterObject> sorted = validate_tilting(A, T);
  (void)sorted;
  std::vector<DimVec> dims;
  dims.reserve(T.size());
  for (const auto& t : T) dims.push_back(t.dim());
  std::vector<DimVec> twisted = right_twist(A.ambient, dims);
  std::vector<ClusterObject> seq;
  seq.reserve(twisted.size());
  for (const auto& w : twisted) seq.push_back(object_from_signed_dim(A.ambient, w));
  SeqCheck chk = check_signed_exc_seq(A, seq);
  if (!chk.ok)
    fail("ConsistencyError",
         "twist output is not a signed exceptional sequence: " + chk.reason);
  return seq;
}

std::vector<ClusterObject> schofield_order(const WideSubcat& A,
                                           std::vector<ClusterObject> T) {
  std::vector<ClusterObject> sorted = validate_tilting(A, std::move(T));
  const int k = (int)sorted.size();
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::vector<ClusterObject> candidate(k);
    for (int i = 0; i < k; ++i) candidate[i] = sorted[idx[i]];
    if (check_signed_exc_seq(A, candidate).ok) return candidate;
  } while (std::next_permutation(idx.begin(), idx.end()));
  fail("NotOrderable",
       "no ordering of the set is a signed exceptional sequence");
}

PermuteOutcome permute_seq(const WideSubcat& A,
                           const std::vector<ClusterObject>& seq,
                           const std::vector<int>& perm) {
  const int k = (int)seq.size();
  if ((int)perm.size() != k) fail("UsageError", "permutation length mismatch");
  std::vector<bool> seen(k, false);
  for (int p : perm) {
    if (p < 0 || p >= k || seen[p]) fail("UsageError", "not a permutation");
    seen[p] = true;
  }
  SeqCheck chk = check_signed_exc_seq(A, seq);
  if (!chk.ok) fail("ConsistencyError", chk.reason);

  PermuteOutcome out;
  const QuiverSpec& q = A.ambient;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (perm[a] <= perm[b]) continue;
      // Positions perm[b] < perm[a] in the input get transposed; the move is
      // legal only if the two underlying modules are fully orthogonal.
      const DimVec& x = seq[perm[b]].root;
      const DimVec& y = seq[perm[a]].root;
      if (euler_form(q, x, y) != 0 || euler_form(q, y, x) != 0) {
        out.bad_i = perm[b];
        out.bad_j = perm[a];
        return out;
      }
    }
  }
  out.seq.resize(k);
  for (int l = 0; l < k; ++l) out.seq[l] = seq[perm[l]];
  SeqCheck post = check_signed_exc_seq(A, out.seq);
  if (!post.ok)
    fail("ConsistencyError",
         "permuted sequence failed validation: " + post.reason);
  out.ok = true;
  return out;
}

std::vector<std::vector<ClusterObject>> enumerate_signed_seqs(
    const WideSubcat& A, int k) {
  if (k < 0 || k > A.rank()) fail("UsageError", "sequence length out of range");
  std::vector<std::vector<ClusterObject>> out;
  std::vector<ClusterObject> tail;  // entries k-1, k-2, ... (right to left)
  auto build = [&](auto&& self, const WideSubcat& cur, int remaining) -> void {
    if (remaining == 0) {
      std::vector<ClusterObject> seq(tail.rbegin(), tail.rend());
      out.push_back(std::move(seq));
      return;
    }
    for (const auto& x : cluster_objects(cur)) {
      tail.push_back(x);
      if (remaining == 1) {
        self(self, cur, 0);
      } else {
        self(self, perp_category(cur, {x}), remaining - 1);
      }
      tail.pop_back();
    }
  };
  build(build, A, k);
  auto key = [](const std::vector<ClusterObject>& seq) {
    std::vector<DimVec> dims;
    dims.reserve(seq.size());
    for (const auto& x : seq) dims.push_back(x.dim());
    return dims;
  };
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return out;
}

}  // namespace cmcat
