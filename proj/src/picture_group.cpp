#include "cmcat/picture_group.hpp"

#include <map>
#include <set>

#include "cmcat/linalg.hpp"

namespace cmcat {

namespace {

// Edge a -> b: a must come before b (hom(a, b) != 0 or ext(b, a) != 0).
bool forces_before(const QuiverSpec& q, const DimVec& a, const DimVec& b) {
  return hom_dim(q, a, b) != 0 || ext_dim(q, b, a) != 0;
}

}  // namespace

ConvexCheck is_convex(const QuiverSpec& q, std::vector<DimVec> roots) {
  ConvexCheck out;
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (const auto& r : roots) {
    if (!is_positive_root(q, r))
      fail("NonRootInput", vec_str(r) + " is not a positive root");
  }
  std::set<DimVec> members(roots.begin(), roots.end());
  const int m = (int)roots.size();

  // Closure: every wide subcategory generated inside S stays inside S.
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<DimVec> subset;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) subset.push_back(roots[i]);
    WideSubcat A;
    try {
      A = make_wide(q, subset);
    } catch (const DomainError&) {
      continue;  // not the simples of a wide subcategory
    }
    for (const DimVec& g : indecomposables(A)) {
      if (!members.count(g)) {
        out.reason = "closure";
        out.witness = subset;
        out.missing = g;
        return out;
      }
    }
  }

  // Orderability: build the total order from the back; a root may be placed
  // last when nothing remaining is forced after it.
  std::vector<DimVec> remaining = roots;
  std::vector<DimVec> rev;
  while (!remaining.empty()) {
    int pick = -1;
    for (int i = 0; i < (int)remaining.size(); ++i) {
      bool maximal = true;
      for (int j = 0; j < (int)remaining.size() && maximal; ++j) {
        if (j != i && forces_before(q, remaining[i], remaining[j]))
          maximal = false;
      }
      if (maximal && (pick < 0 || remaining[i] > remaining[pick])) pick = i;
    }
    if (pick < 0) {
      // Precedence digraph has a cycle among the remaining roots.
      out.reason = "order";
      out.witness = remaining;
      return out;
    }
    rev.push_back(remaining[pick]);
    remaining.erase(remaining.begin() + pick);
  }
  out.order.assign(rev.rbegin(), rev.rend());
  out.ok = true;
  return out;
}

ConvexRootSet make_convex(const QuiverSpec& q, std::vector<DimVec> roots) {
  ConvexCheck chk = is_convex(q, roots);
  if (!chk.ok) {
    std::string detail = chk.reason == "closure"
                             ? "missing indecomposable " + vec_str(chk.missing)
                             : "precedence digraph has a cycle";
    fail("NotConvex", "root set is not convex: " + detail);
  }
  ConvexRootSet S;
  S.q = q;
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  S.roots = std::move(roots);
  S.order = std::move(chk.order);
  return S;
}

std::vector<DimVec> ab_product(const QuiverSpec& q, const DimVec& a,
                               const DimVec& b) {
  if (a == b) fail("UsageError", "ab product needs two distinct roots");
  if (!is_positive_root(q, a) || !is_positive_root(q, b))
    fail("NonRootInput", "ab product needs positive roots");
  struct Entry {
    Int x, y;
    DimVec root;
  };
  std::vector<Entry> entries;
  for (const DimVec& g : positive_roots(q)) {
    RatVec c;
    if (!span_coefficients({a, b}, g, c) || !is_integral(c)) continue;
    const Int x = c[0].numerator(), y = c[1].numerator();
    if (x < 0 || y < 0 || (x == 0 && y == 0)) continue;
    entries.push_back({x, y, g});
  }
  // Ascending x:y; the pure-a root (y = 0) compares as infinity.
  std::sort(entries.begin(), entries.end(), [](const Entry& p, const Entry& r) {
    return p.x * r.y < r.x * p.y;
  });
  std::vector<DimVec> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(std::move(e.root));
  return out;
}

GroupPresentation presentation(const ConvexRootSet& S) {
  const QuiverSpec& q = S.q;
  GroupPresentation pres;
  pres.generators = S.roots;
  std::set<DimVec> members(S.roots.begin(), S.roots.end());
  for (const DimVec& a : S.roots) {
    for (const DimVec& b : S.roots) {
      if (a == b) continue;
      if (hom_dim(q, a, b) != 0 || hom_dim(q, b, a) != 0) continue;
      if (ext_dim(q, a, b) != 0) continue;
      // Fully orthogonal pairs give the same commutation relation twice;
      // keep only the lexicographically ordered copy.
      if (ext_dim(q, b, a) == 0 && b < a) continue;
      Relation rel;
      rel.lhs.syllables = {{a, 1}, {b, 1}};
      for (const DimVec& g : ab_product(q, a, b)) {
        if (!members.count(g))
          fail("ConsistencyError",
               "relation leaves the root set; set is not convex");
        rel.rhs.syllables.push_back({g, 1});
      }
      pres.relations.push_back(std::move(rel));
    }
  }
  return pres;
}

HnnData hnn_data(const ConvexRootSet& S) {
  if (S.roots.empty()) fail("UsageError", "empty root set has no maximal root");
  const QuiverSpec& q = S.q;
  HnnData data;
  data.omega = S.order.back();

  // The maximal root must satisfy hom(omega, alpha) = 0 and
  // ext(alpha, omega) = 0 against the rest; both follow from maximality.
  std::vector<DimVec> rest;
  for (const DimVec& g : S.roots)
    if (g != data.omega) rest.push_back(g);
  for (const DimVec& g : rest) {
    if (hom_dim(q, data.omega, g) != 0 || ext_dim(q, g, data.omega) != 0)
      fail("ConsistencyError", "maximal root fails the splitting conditions");
  }
  data.s0 = make_convex(q, rest);

  std::vector<DimVec> orth;
  for (const DimVec& g : rest)
    if (euler_form(q, g, data.omega) == 0) orth.push_back(g);
  data.s_omega = make_convex(q, orth);

  for (const DimVec& alpha : data.s_omega.roots) {
    struct Entry {
      Int x, y;
      DimVec root;
    };
    std::vector<Entry> entries;
    for (const DimVec& g : S.roots) {
      RatVec c;
      if (!span_coefficients({alpha, data.omega}, g, c) || !is_integral(c))
        continue;
      const Int x = c[0].numerator(), y = c[1].numerator();
      if (x <= 0 || y < 0) continue;
      entries.push_back({x, y, g});
    }
    // Decreasing y/x, ending with alpha itself (y = 0).
    std::sort(entries.begin(), entries.end(),
              [](const Entry& p, const Entry& r) {
                return p.y * r.x > r.y * p.x;
              });
    std::vector<DimVec> word;
    word.reserve(entries.size());
    for (auto& e : entries) word.push_back(std::move(e.root));
    data.psi.emplace_back(alpha, std::move(word));
  }

  std::set<DimVec> orth_set(data.s_omega.roots.begin(),
                            data.s_omega.roots.end());
  for (const DimVec& g : data.s0.roots) {
    std::vector<DimVec> image;
    if (orth_set.count(g)) image.push_back(g);
    data.retraction.emplace_back(g, std::move(image));
  }
  return data;
}

namespace {

using Letter = std::pair<int, int>;  // generator index, +1 or -1

std::vector<Letter> relator_letters(const std::map<DimVec, int>& id,
                                    const Relation& rel) {
  std::vector<Letter> w;
  for (const auto& [root, e] : rel.lhs.syllables) {
    const int g = id.at(root);
    for (int t = 0; t < std::abs(e); ++t) w.push_back({g, e > 0 ? 1 : -1});
  }
  for (auto it = rel.rhs.syllables.rbegin(); it != rel.rhs.syllables.rend();
       ++it) {
    const int g = id.at(it->first);
    const int e = it->second;
    for (int t = 0; t < std::abs(e); ++t) w.push_back({g, e > 0 ? -1 : 1});
  }
  return w;
}

std::vector<Letter> free_cyclic_reduce(std::vector<Letter> w) {
  // Free reduction.
  std::vector<Letter> r;
  for (const Letter& l : w) {
    if (!r.empty() && r.back().first == l.first &&
        r.back().second == -l.second) {
      r.pop_back();
    } else {
      r.push_back(l);
    }
  }
  // Cyclic reduction.
  while (r.size() >= 2 && r.front().first == r.back().first &&
         r.front().second == -r.back().second) {
    r.erase(r.begin());
    r.pop_back();
  }
  return r;
}

std::vector<Letter> canonical_relator(const std::map<DimVec, int>& id,
                                      const Relation& rel) {
  std::vector<Letter> w = free_cyclic_reduce(relator_letters(id, rel));
  if (w.empty()) return w;
  std::vector<Letter> best;
  for (int invert = 0; invert < 2; ++invert) {
    std::vector<Letter> base = w;
    if (invert) {
      std::reverse(base.begin(), base.end());
      for (Letter& l : base) l.second = -l.second;
    }
    for (size_t s = 0; s < base.size(); ++s) {
      std::vector<Letter> rot(base.begin() + s, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + s);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

}  // namespace

bool hnn_relation_check(const ConvexRootSet& S) {
  if (S.roots.empty()) return true;
  GroupPresentation pres = presentation(S);
  HnnData data = hnn_data(S);
  std::map<DimVec, int> id;
  for (int i = 0; i < (int)pres.generators.size(); ++i)
    id[pres.generators[i]] = i;

  std::set<std::vector<Letter>> canon;
  for (const Relation& rel : pres.relations)
    canon.insert(canonical_relator(id, rel));

  for (const auto& [alpha, word] : data.psi) {
    Relation expected;
    expected.lhs.syllables = {{alpha, 1}, {data.omega, 1}};
    expected.rhs.syllables.push_back({data.omega, 1});
    for (const DimVec& g : word) expected.rhs.syllables.push_back({g, 1});
    if (!canon.count(canonical_relator(id, expected))) return false;
  }
  return true;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  std::map<DimVec, int> id;
  for (int i = 0; i < (int)p.generators.size(); ++i) id[p.generators[i]] = i;
  IntMat rows;
  for (const Relation& rel : p.relations) {
    std::vector<Int> row(p.generators.size(), 0);
    for (const auto& [root, e] : rel.lhs.syllables) row[id.at(root)] += e;
    for (const auto& [root, e] : rel.rhs.syllables) row[id.at(root)] -= e;
    rows.push_back(std::move(row));
  }
  AbelianInvariants inv;
  if (rows.empty()) {
    inv.free_rank = (Int)p.generators.size();
    return inv;
  }
  std::vector<Int> divs = smith_invariants(std::move(rows));
  inv.free_rank = (Int)p.generators.size() - (Int)divs.size();
  for (Int d : divs)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

}  // namespace cmcat
