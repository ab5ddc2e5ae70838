#include "cmcat/cluster.hpp"

#include <set>

#include "cmcat/linalg.hpp"

namespace cmcat {

namespace {

bool is_cluster_object(const WideSubcat& A, const ClusterObject& X) {
  const auto& objs = cluster_objects(A);
  return std::binary_search(objs.begin(), objs.end(), X);
}

void require_cluster_object(const WideSubcat& A, const ClusterObject& X,
                            const char* role) {
  if (!is_cluster_object(A, X))
    fail("NonRootInput", std::string(role) + " " + vec_str(X.dim()) +
                             " is not a cluster object of the subcategory");
}

}  // namespace

bool compatible(const WideSubcat& A, const ClusterObject& X,
                const ClusterObject& Y) {
  require_cluster_object(A, X, "object");
  require_cluster_object(A, Y, "object");
  const QuiverSpec& q = A.ambient;
  if (!X.shifted && !Y.shifted)
    return ext_dim(q, X.root, Y.root) == 0 && ext_dim(q, Y.root, X.root) == 0;
  if (X.shifted && Y.shifted) return true;
  const ClusterObject& shifted = X.shifted ? X : Y;
  const ClusterObject& module = X.shifted ? Y : X;
  return hom_dim(q, shifted.root, module.root) == 0;
}

std::vector<ClusterObject> validate_tilting(const WideSubcat& A,
                                            std::vector<ClusterObject> objs) {
  std::sort(objs.begin(), objs.end());
  for (size_t i = 0; i + 1 < objs.size(); ++i) {
    if (objs[i] == objs[i + 1])
      fail("ConsistencyError",
           "duplicate object " + vec_str(objs[i].dim()) + " in tilting set");
  }
  for (const auto& x : objs) require_cluster_object(A, x, "object");
  for (size_t i = 0; i < objs.size(); ++i) {
    for (size_t j = i + 1; j < objs.size(); ++j) {
      if (!compatible(A, objs[i], objs[j]))
        fail("ConsistencyError", "objects " + vec_str(objs[i].dim()) + " and " +
                                     vec_str(objs[j].dim()) +
                                     " are not ext-compatible");
    }
  }
  if ((int)objs.size() > A.rank())
    fail("ConsistencyError", "tilting set larger than the rank");
  return objs;
}

std::vector<std::vector<ClusterObject>> enumerate_tilting_sets(
    const WideSubcat& A, int k) {
  if (k < 0 || k > A.rank())
    fail("UsageError", "tilting set size out of range");
  const auto& objs = cluster_objects(A);
  std::vector<std::vector<ClusterObject>> out;
  std::vector<int> chosen;
  auto extend = [&](auto&& self, int from) -> void {
    if ((int)chosen.size() == k) {
      std::vector<ClusterObject> set;
      for (int i : chosen) set.push_back(objs[i]);
      out.push_back(std::move(set));
      return;
    }
    for (int i = from; i < (int)objs.size(); ++i) {
      bool ok = true;
      for (int j : chosen) {
        if (!compatible(A, objs[j], objs[i])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<ClusterObject> mutate(const WideSubcat& A,
                                  const std::vector<ClusterObject>& T, int j) {
  std::vector<ClusterObject> sorted = validate_tilting(A, T);
  if ((int)sorted.size() != A.rank())
    fail("ConsistencyError", "mutation requires a complete cluster tilting set");
  if (j < 0 || j >= (int)sorted.size())
    fail("UsageError", "mutation index out of range");
  const ClusterObject removed = sorted[j];
  std::vector<ClusterObject> rest = sorted;
  rest.erase(rest.begin() + j);
  std::vector<ClusterObject> found;
  for (const auto& x : cluster_objects(A)) {
    if (x == removed) continue;
    if (std::binary_search(rest.begin(), rest.end(), x)) continue;
    bool ok = true;
    for (const auto& t : rest) {
      if (!compatible(A, t, x)) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(x);
  }
  if (found.size() != 1)
    fail("UniquenessViolation",
         "expected exactly one exchange for " + vec_str(removed.dim()) +
             ", found " + std::to_string(found.size()));
  rest.push_back(found[0]);
  std::sort(rest.begin(), rest.end());
  return rest;
}

namespace {

ClusterObject transfer(const WideSubcat& A, const std::vector<ClusterObject>& T,
                       const DimVec& target_dim, const char* what) {
  // Unique cluster object X of A, compatible with T and not in T, with
  // dim X - target_dim in the rational span of the dim T_i.
  std::vector<DimVec> span;
  for (const auto& t : T) span.push_back(t.dim());
  std::vector<ClusterObject> found;
  for (const auto& x : cluster_objects(A)) {
    if (std::binary_search(T.begin(), T.end(), x)) continue;
    bool ok = true;
    for (const auto& t : T) {
      if (!compatible(A, t, x)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    DimVec diff = vec_sub(x.dim(), target_dim);
    if (is_zero_vec(diff) || in_rational_span(span, diff)) found.push_back(x);
  }
  if (found.size() != 1)
    fail("UniquenessViolation", std::string(what) + ": expected a unique " +
                                    "congruent cluster object, found " +
                                    std::to_string(found.size()));
  return found[0];
}

}  // namespace

ClusterObject sigma(const WideSubcat& A, const std::vector<ClusterObject>& T,
                    const ClusterObject& S) {
  std::vector<ClusterObject> sorted = validate_tilting(A, T);
  WideSubcat B = perp_category(A, sorted);
  require_cluster_object(B, S, "transfer argument");
  return transfer(A, sorted, S.dim(), "sigma");
}

ClusterObject sigma_inverse(const WideSubcat& A,
                            const std::vector<ClusterObject>& T,
                            const ClusterObject& X) {
  std::vector<ClusterObject> sorted = validate_tilting(A, T);
  require_cluster_object(A, X, "transfer argument");
  if (std::binary_search(sorted.begin(), sorted.end(), X))
    fail("ConsistencyError", "object lies in the tilting set");
  for (const auto& t : sorted) {
    if (!compatible(A, t, X))
      fail("ConsistencyError", "object is not compatible with the tilting set");
  }
  WideSubcat B = perp_category(A, sorted);
  std::vector<DimVec> span;
  for (const auto& t : sorted) span.push_back(t.dim());
  std::vector<ClusterObject> found;
  for (const auto& s : cluster_objects(B)) {
    DimVec diff = vec_sub(X.dim(), s.dim());
    if (is_zero_vec(diff) || in_rational_span(span, diff)) found.push_back(s);
  }
  if (found.size() != 1)
    fail("UniquenessViolation",
         "sigma_inverse: expected a unique congruent cluster object, found " +
             std::to_string(found.size()));
  return found[0];
}

ClusterMorphism make_morphism(WideSubcat source,
                              std::vector<ClusterObject> tilting) {
  ClusterMorphism m;
  m.tilting = validate_tilting(source, std::move(tilting));
  m.source = std::move(source);
  return m;
}

WideSubcat morphism_target(const ClusterMorphism& m) {
  return perp_category(m.source, m.tilting);
}

ClusterMorphism identity_morphism(const WideSubcat& A) {
  return make_morphism(A, {});
}

ClusterMorphism compose(const ClusterMorphism& g, const ClusterMorphism& f) {
  if (!(morphism_target(f) == g.source))
    fail("ConsistencyError",
         "morphisms are not composable: target(f) differs from source(g)");
  std::vector<ClusterObject> combined = f.tilting;
  for (const auto& s : g.tilting)
    combined.push_back(sigma(f.source, f.tilting, s));
  return make_morphism(f.source, std::move(combined));
}

bool morphism_equal(const ClusterMorphism& a, const ClusterMorphism& b) {
  return a.source == b.source && a.tilting == b.tilting;
}

}  // namespace cmcat
