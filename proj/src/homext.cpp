#include "cmcat/homext.hpp"

#include <map>
#include <mutex>
#include <set>

#include "cmcat/linalg.hpp"

namespace cmcat {

Int hom_dim(const QuiverSpec& q, const DimVec& g, const DimVec& d) {
  if (!is_positive_root(q, g) || !is_positive_root(q, d))
    fail("NonRootInput", "hom requires positive roots, got " + vec_str(g) +
                             " and " + vec_str(d));
  return std::max<Int>(euler_form(q, g, d), 0);
}

Int ext_dim(const QuiverSpec& q, const DimVec& g, const DimVec& d) {
  if (!is_positive_root(q, g) || !is_positive_root(q, d))
    fail("NonRootInput", "ext requires positive roots, got " + vec_str(g) +
                             " and " + vec_str(d));
  return std::max<Int>(-euler_form(q, g, d), 0);
}

ClusterObject object_from_signed_dim(const QuiverSpec& q, const DimVec& sd) {
  if ((int)sd.size() != q.n)
    fail("DimensionMismatch", "signed dimension vector length mismatch");
  if (is_zero_vec(sd)) fail("NonRootInput", "zero vector is not an object");
  ClusterObject x;
  if (all_nonneg(sd)) {
    x.root = sd;
    x.shifted = false;
  } else if (all_nonpos(sd)) {
    x.root = negated(sd);
    x.shifted = true;
  } else {
    fail("SignViolation",
         "signed dimension vector has mixed signs: " + vec_str(sd));
  }
  if (!is_positive_root(q, x.root))
    fail("NonRootInput", vec_str(x.root) + " is not a positive root");
  return x;
}

WideSubcat full_subcat(const QuiverSpec& q) {
  std::vector<DimVec> simples;
  for (int i = 0; i < q.n; ++i) {
    DimVec e(q.n, 0);
    e[i] = 1;
    simples.push_back(std::move(e));
  }
  return make_wide(q, std::move(simples));
}

WideSubcat make_wide(const QuiverSpec& q, std::vector<DimVec> simples) {
  std::sort(simples.begin(), simples.end());
  for (size_t i = 0; i + 1 < simples.size(); ++i) {
    if (simples[i] == simples[i + 1])
      fail("ConsistencyError", "duplicate simple " + vec_str(simples[i]));
  }
  for (const auto& s : simples) {
    if (!is_positive_root(q, s))
      fail("NonRootInput", vec_str(s) + " is not a positive root");
  }
  const int k = (int)simples.size();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && hom_dim(q, simples[i], simples[j]) != 0)
        fail("ConsistencyError",
             "simples are not hom-orthogonal: hom(" + vec_str(simples[i]) +
                 "," + vec_str(simples[j]) + ") != 0");
    }
  }
  // Ext digraph must be acyclic (edge i -> j when ext(s_i, s_j) > 0).
  std::vector<int> state(k, 0);
  auto dfs = [&](auto&& self, int v) -> bool {
    state[v] = 1;
    for (int w = 0; w < k; ++w) {
      if (w == v || ext_dim(q, simples[v], simples[w]) == 0) continue;
      if (state[w] == 1) return false;
      if (state[w] == 0 && !self(self, w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (int v = 0; v < k; ++v) {
    if (state[v] == 0 && !dfs(dfs, v))
      fail("ConsistencyError", "Ext digraph of the simples has a cycle");
  }
  WideSubcat A;
  A.ambient = q;
  A.simples = std::move(simples);
  return A;
}

namespace {

struct SubcatCache {
  std::vector<DimVec> indecs;
  std::set<DimVec> indec_set;
  std::vector<DimVec> projectives;
  std::set<DimVec> projective_set;
  std::vector<ClusterObject> objects;
};

std::string subcat_key(const WideSubcat& A) {
  std::string key = quiver_key(A.ambient) + "|";
  for (const auto& s : A.simples) key += vec_str(s);
  return key;
}

const SubcatCache& subcat_cache(const WideSubcat& A) {
  static std::map<std::string, SubcatCache> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const std::string key = subcat_key(A);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  SubcatCache sc;
  for (const DimVec& g : positive_roots(A.ambient)) {
    RatVec c;
    if (!span_coefficients(A.simples, g, c) || !is_integral(c)) continue;
    sc.indecs.push_back(g);
    sc.indec_set.insert(g);
  }
  for (const DimVec& g : sc.indecs) {
    bool proj = true;
    for (const DimVec& d : sc.indecs) {
      if (ext_dim(A.ambient, g, d) != 0) {
        proj = false;
        break;
      }
    }
    if (proj) {
      sc.projectives.push_back(g);
      sc.projective_set.insert(g);
    }
  }
  for (const DimVec& g : sc.indecs) sc.objects.push_back({g, false});
  for (const DimVec& g : sc.projectives) sc.objects.push_back({g, true});
  std::sort(sc.objects.begin(), sc.objects.end());
  auto [pos, inserted] = cache.emplace(key, std::move(sc));
  (void)inserted;
  return pos->second;
}

}  // namespace

const std::vector<DimVec>& indecomposables(const WideSubcat& A) {
  return subcat_cache(A).indecs;
}

std::vector<DimVec> simples_from_roots(const QuiverSpec& q,
                                       std::vector<DimVec> phi) {
  std::sort(phi.begin(), phi.end());
  phi.erase(std::unique(phi.begin(), phi.end()), phi.end());
  std::set<DimVec> members(phi.begin(), phi.end());
  for (const auto& g : phi) {
    if (!is_positive_root(q, g))
      fail("NonRootInput", vec_str(g) + " is not a positive root");
  }
  std::vector<DimVec> simples;
  for (const auto& g : phi) {
    bool is_sum = false;
    for (const auto& h : phi) {
      if (h == g) continue;
      DimVec rest = vec_sub(g, h);
      if (all_nonneg(rest) && !is_zero_vec(rest) && members.count(rest)) {
        is_sum = true;
        break;
      }
    }
    if (!is_sum) simples.push_back(g);
  }
  WideSubcat A = make_wide(q, simples);  // throws ConsistencyError if invalid
  if (indecomposables(A) != phi)
    fail("ConsistencyError",
         "root list is not the set of indecomposables of a wide subcategory");
  return A.simples;
}

const std::vector<DimVec>& relative_projectives(const WideSubcat& A) {
  return subcat_cache(A).projectives;
}

const std::vector<ClusterObject>& cluster_objects(const WideSubcat& A) {
  return subcat_cache(A).objects;
}

WideSubcat perp_category(const WideSubcat& A,
                         const std::vector<ClusterObject>& objs) {
  const SubcatCache& sc = subcat_cache(A);
  for (const auto& t : objs) {
    if (!sc.indec_set.count(t.root))
      fail("NonRootInput",
           vec_str(t.root) + " is not an indecomposable of the subcategory");
  }
  std::vector<DimVec> kept;
  for (const DimVec& d : sc.indecs) {
    bool ok = true;
    for (const auto& t : objs) {
      if (hom_dim(A.ambient, t.root, d) != 0 ||
          ext_dim(A.ambient, t.root, d) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(d);
  }
  return make_wide(A.ambient, simples_from_roots(A.ambient, kept));
}

SubQuiver sub_quiver(const WideSubcat& A) {
  const QuiverSpec& q = A.ambient;
  // Admissible numbering: vertex i may only have Ext to vertices with lower
  // index, so repeatedly emit a simple with no Ext into the not-yet-placed
  // ones; ties break towards the lexicographically largest root, which makes
  // the full subcategory reproduce the ambient vertex order.
  std::vector<DimVec> remaining = A.simples;
  std::vector<DimVec> order;
  while (!remaining.empty()) {
    int pick = -1;
    for (int i = (int)remaining.size() - 1; i >= 0; --i) {
      bool ok = true;
      for (int j = 0; j < (int)remaining.size() && ok; ++j) {
        if (j != i && ext_dim(q, remaining[i], remaining[j]) != 0) ok = false;
      }
      if (ok && (pick < 0 || remaining[i] > remaining[pick])) pick = i;
    }
    if (pick < 0)
      fail("ConsistencyError", "Ext digraph of the simples has a cycle");
    order.push_back(remaining[pick]);
    remaining.erase(remaining.begin() + pick);
  }
  const int k = (int)order.size();
  std::vector<Int> f(k);
  std::vector<std::vector<Int>> euler(k, std::vector<Int>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) euler[i][j] = euler_form(q, order[i], order[j]);
    f[i] = euler[i][i];
  }
  SubQuiver sq;
  sq.q = make_quiver(k, std::move(f), std::move(euler));
  sq.basis = std::move(order);
  return sq;
}

bool in_integer_span_of_simples(const WideSubcat& A, const DimVec& v) {
  RatVec c;
  return span_coefficients(A.simples, v, c) && is_integral(c);
}

RatVec simple_coordinates(const WideSubcat& A, const DimVec& v) {
  RatVec c;
  if (!span_coefficients(A.simples, v, c))
    fail("ConsistencyError",
         vec_str(v) + " is not in the span of the subcategory simples");
  return c;
}

}  // namespace cmcat
