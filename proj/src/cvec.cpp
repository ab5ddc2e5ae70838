#include "cmcat/cvec.hpp"

#include <numeric>

#include "cmcat/linalg.hpp"

namespace cmcat {

CVectors c_vectors(const WideSubcat& A, const std::vector<ClusterObject>& T) {
  std::vector<ClusterObject> sorted = validate_tilting(A, T);
  if ((int)sorted.size() != A.rank())
    fail("ConsistencyError", "c-vectors require a complete cluster tilting set");
  const int k = A.rank();
  SubQuiver sq = sub_quiver(A);

  // Signed dimension vectors of the T_i in sub-quiver coordinates.
  std::vector<DimVec> d(k);
  for (int i = 0; i < k; ++i) {
    RatVec c;
    if (!span_coefficients(sq.basis, T[i].dim(), c) || !is_integral(c))
      fail("ConsistencyError",
           "tilting object is not an integer combination of the simples");
    DimVec di(k);
    for (int t = 0; t < k; ++t) di[t] = c[t].numerator();
    d[i] = std::move(di);
  }

  CVectors out;
  out.local.resize(k);
  out.ambient.resize(k);
  for (int j = 0; j < k; ++j) {
    // Solve <d_i, beta> = -f_i delta_ij over the sub-quiver form.
    RatMat M(k, RatVec(k));
    RatVec rhs(k);
    for (int i = 0; i < k; ++i) {
      for (int t = 0; t < k; ++t) {
        Rat coeff(0);
        for (int u = 0; u < k; ++u) coeff += Rat(d[i][u] * sq.q.euler[u][t]);
        M[i][t] = coeff;
      }
      rhs[i] = (i == j) ? Rat(-euler_form(sq.q, d[i], d[i])) : Rat(0);
    }
    if (det_rational(M) == Rat(0))
      fail("SingularSystem", "tilting dimension vectors are not a basis");
    RatVec beta;
    if (!solve_rational(std::move(M), std::move(rhs), beta))
      fail("SingularSystem", "c-vector system is inconsistent");
    if (!is_integral(beta))
      fail("IntegralityViolation", "c-vector is not an integer vector");
    DimVec b(k);
    for (int t = 0; t < k; ++t) b[t] = beta[t].numerator();
    const DimVec check = all_nonneg(b) ? b : negated(b);
    if (!(all_nonneg(b) || all_nonpos(b)) || !is_positive_root(sq.q, check))
      fail("ConsistencyError",
           "c-vector " + vec_str(b) + " is not plus or minus a positive root");
    DimVec amb(A.ambient.n, 0);
    for (int t = 0; t < k; ++t)
      for (int u = 0; u < A.ambient.n; ++u) amb[u] += b[t] * sq.basis[t][u];
    out.local[j] = std::move(b);
    out.ambient[j] = std::move(amb);
  }
  return out;
}

ExchangeVerdict check_exchange_equals_bijective(
    const WideSubcat& A, const std::vector<ClusterObject>& T) {
  ExchangeVerdict v;
  const QuiverSpec& q = A.ambient;
  const int k = (int)T.size();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (euler_form(q, T[i].dim(), T[j].dim()) != 0) {
        v.bad_i = i;
        v.bad_j = j;
        return v;
      }
    }
  }
  v.ordering_ok = true;
  CVectors cv = c_vectors(A, T);
  std::vector<ClusterObject> seq = theta_inverse(A, T);
  for (int j = 0; j < k; ++j) {
    if (negated(seq[j].dim()) != cv.ambient[j]) {
      v.bad_slot = j;
      return v;
    }
  }
  v.equality_ok = true;
  return v;
}

std::vector<int> good_permutation(const WideSubcat& A,
                                  const std::vector<ClusterObject>& T) {
  std::vector<ClusterObject> sorted = validate_tilting(A, T);
  const QuiverSpec& q = A.ambient;
  const int k = (int)sorted.size();
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j)
        if (euler_form(q, sorted[idx[i]].dim(), sorted[idx[j]].dim()) != 0)
          ok = false;
    if (ok) return idx;
  } while (std::next_permutation(idx.begin(), idx.end()));
  fail("NotOrderable", "no ordering makes the Euler pairings vanish above the "
                       "diagonal");
}

bool speyer_thomas_check(const WideSubcat& A, const std::vector<DimVec>& cvecs) {
  const QuiverSpec& q = A.ambient;
  const int k = (int)cvecs.size();
  std::vector<ClusterObject> objs(k);
  for (int j = 0; j < k; ++j) {
    try {
      objs[j] = object_from_signed_dim(q, negated(cvecs[j]));
    } catch (const DomainError&) {
      return false;  // not plus or minus a root
    }
  }
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::vector<ClusterObject> seq(k);
    for (int i = 0; i < k; ++i) seq[i] = objs[idx[i]];
    // Shifted objects must form a prefix, modules the suffix.
    bool split_ok = true;
    for (int i = 1; i < k && split_ok; ++i)
      if (seq[i - 1].shifted == false && seq[i].shifted == true) split_ok = false;
    if (!split_ok) continue;
    bool orth = true;
    for (int i = 0; i < k && orth; ++i) {
      for (int j = 0; j < k && orth; ++j) {
        if (i == j || seq[i].shifted != seq[j].shifted) continue;
        if (hom_dim(q, seq[i].root, seq[j].root) != 0) orth = false;
      }
    }
    if (!orth) continue;
    if (check_signed_exc_seq(A, seq).ok) return true;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return false;
}

}  // namespace cmcat
