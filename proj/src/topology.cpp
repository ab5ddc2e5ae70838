#include "cmcat/topology.hpp"

#include <map>
#include <set>

namespace cmcat {

CategoryInventory enumerate_objects(const ConvexRootSet& S) {
  const int m = (int)S.roots.size();
  if (m > 20) fail("UsageError", "root set too large to enumerate");
  std::vector<WideSubcat> cats;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<DimVec> subset;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) subset.push_back(S.roots[i]);
    WideSubcat A;
    try {
      A = make_wide(S.q, subset);
    } catch (const DomainError&) {
      continue;
    }
    cats.push_back(std::move(A));
  }
  int top = 0;
  for (const auto& A : cats) top = std::max(top, A.rank());
  CategoryInventory inv;
  inv.by_rank.assign(top + 1, {});
  for (auto& A : cats) inv.by_rank[A.rank()].push_back(std::move(A));
  for (auto& level : inv.by_rank) std::sort(level.begin(), level.end());
  return inv;
}

Int count_morphisms(const WideSubcat& from, const WideSubcat& to) {
  const int k = from.rank() - to.rank();
  if (k < 0) return 0;
  Int count = 0;
  for (const auto& T : enumerate_tilting_sets(from, k)) {
    if (perp_category(from, T) == to) ++count;
  }
  return count;
}

SimplicialComplexData cluster_complex(const WideSubcat& A) {
  SimplicialComplexData c;
  c.vertices = cluster_objects(A);
  for (const auto& T : enumerate_tilting_sets(A, A.rank())) {
    std::vector<int> facet;
    for (const auto& x : T) {
      const auto it = std::lower_bound(c.vertices.begin(), c.vertices.end(), x);
      facet.push_back((int)(it - c.vertices.begin()));
    }
    std::sort(facet.begin(), facet.end());
    c.facets.push_back(std::move(facet));
  }
  std::sort(c.facets.begin(), c.facets.end());
  return c;
}

namespace {

// All simplices grouped by dimension, each a sorted vertex index list;
// dimension -1 (the empty simplex) is always present.
std::vector<std::vector<std::vector<int>>> simplices_by_dim(
    const SimplicialComplexData& c) {
  std::set<std::vector<int>> seen;
  seen.insert(std::vector<int>{});
  for (const auto& facet : c.facets) {
    const int n = (int)facet.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(facet[i]);
      seen.insert(std::move(s));
    }
  }
  int top = -1;
  for (const auto& s : seen) top = std::max(top, (int)s.size() - 1);
  std::vector<std::vector<std::vector<int>>> by_dim(top + 2);
  for (const auto& s : seen) by_dim[s.size()].push_back(s);  // index = dim + 1
  for (auto& level : by_dim) std::sort(level.begin(), level.end());
  return by_dim;
}

HomologyResult homology_from_boundaries(const std::vector<Int>& counts,
                                        const std::vector<IntMat>& boundary,
                                        int lowest_degree) {
  // boundary[i] maps chains of degree (lowest_degree + i) to the next lower
  // degree; boundary[0] is the zero map out of the lowest level.
  HomologyResult out;
  out.lowest_degree = lowest_degree;
  const int levels = (int)counts.size();
  for (int i = 0; i < levels; ++i) {
    const int rank_out = (i < (int)boundary.size() && !boundary[i].empty())
                             ? rank_integer(boundary[i])
                             : 0;
    const int rank_in = (i + 1 < (int)boundary.size() && !boundary[i + 1].empty())
                            ? rank_integer(boundary[i + 1])
                            : 0;
    HomologyGroup g;
    g.free_rank = counts[i] - rank_out - rank_in;
    if (i + 1 < (int)boundary.size() && !boundary[i + 1].empty()) {
      for (Int d : smith_invariants(boundary[i + 1]))
        if (d > 1) g.torsion.push_back(d);
    }
    out.groups.push_back(std::move(g));
  }
  return out;
}

}  // namespace

HomologyResult simplicial_homology(const SimplicialComplexData& c) {
  auto by_dim = simplices_by_dim(c);  // index d+1 holds dimension d
  const int levels = (int)by_dim.size();
  std::vector<Int> counts(levels);
  for (int i = 0; i < levels; ++i) counts[i] = (Int)by_dim[i].size();

  std::vector<IntMat> boundary(levels);
  // boundary[i]: degree (i-1) chains -> degree (i-2); boundary[0] is zero.
  for (int i = 1; i < levels; ++i) {
    std::map<std::vector<int>, int> row_index;
    for (int r = 0; r < (int)by_dim[i - 1].size(); ++r)
      row_index[by_dim[i - 1][r]] = r;
    IntMat D(by_dim[i - 1].size(),
             std::vector<Int>(by_dim[i].size(), 0));
    for (int col = 0; col < (int)by_dim[i].size(); ++col) {
      const auto& s = by_dim[i][col];
      for (int drop = 0; drop < (int)s.size(); ++drop) {
        std::vector<int> face = s;
        face.erase(face.begin() + drop);
        D[row_index.at(face)][col] += (drop % 2 == 0) ? 1 : -1;
      }
    }
    boundary[i] = std::move(D);
  }
  return homology_from_boundaries(counts, boundary, -1);
}

PictureSubcomplex picture_subcomplex(const WideSubcat& A, const DimVec& beta) {
  const auto& ind = indecomposables(A);
  if (!std::binary_search(ind.begin(), ind.end(), beta))
    fail("NonRootInput",
         vec_str(beta) + " is not an indecomposable of the subcategory");
  const QuiverSpec& q = A.ambient;
  PictureSubcomplex out;
  for (const auto& x : cluster_objects(A)) {
    if (euler_form(q, x.root, beta) == 0) out.data.vertices.push_back(x);
  }
  const int m = (int)out.data.vertices.size();
  // All compatible subsets of the perpendicular vertices.
  std::vector<std::vector<int>> cliques;
  std::vector<int> cur;
  auto extend = [&](auto&& self, int from) -> void {
    cliques.push_back(cur);
    for (int i = from; i < m; ++i) {
      bool ok = true;
      for (int j : cur) {
        if (!compatible(A, out.data.vertices[j], out.data.vertices[i])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  extend(extend, 0);

  std::set<std::vector<int>> clique_set(cliques.begin(), cliques.end());
  for (const auto& c : cliques) {
    if (c.empty()) continue;
    bool maximal = true;
    for (int i = 0; i < m && maximal; ++i) {
      if (std::binary_search(c.begin(), c.end(), i)) continue;
      std::vector<int> bigger = c;
      bigger.push_back(i);
      std::sort(bigger.begin(), bigger.end());
      if (clique_set.count(bigger)) maximal = false;
    }
    if (maximal) out.data.facets.push_back(c);
  }
  std::sort(out.data.facets.begin(), out.data.facets.end());

  // Wall crossings: each clique of size rank - 1 completes to exactly two
  // cluster tilting sets of A; the sign at a completion is read off the
  // c-vector of the completing slot, which is -beta or +beta.
  const int k = A.rank();
  for (const auto& c : cliques) {
    if ((int)c.size() != k - 1) continue;
    std::vector<ClusterObject> wall;
    for (int i : c) wall.push_back(out.data.vertices[i]);
    std::vector<ClusterObject> completions;
    for (const auto& x : cluster_objects(A)) {
      if (std::binary_search(wall.begin(), wall.end(), x)) continue;
      bool ok = true;
      for (const auto& w : wall) {
        if (!compatible(A, w, x)) {
          ok = false;
          break;
        }
      }
      if (ok) completions.push_back(x);
    }
    if (completions.size() != 2)
      fail("ConsistencyError",
           "wall does not have exactly two completions in the cluster complex");
    for (const auto& x : completions) {
      std::vector<ClusterObject> T = wall;
      T.push_back(x);
      std::sort(T.begin(), T.end());
      std::vector<int> perm = good_permutation(A, T);
      std::vector<ClusterObject> ordered(k);
      for (int i = 0; i < k; ++i) ordered[i] = T[perm[i]];
      CVectors cv = c_vectors(A, ordered);
      int slot = -1;
      for (int i = 0; i < k; ++i)
        if (ordered[i] == x) slot = i;
      const DimVec& cvec = cv.ambient[slot];
      DimVec gamma = negated(cvec);  // the twist vector at the slot
      if (gamma != beta && negated(gamma) != beta)
        fail("ConsistencyError",
             "completing slot twist vector is not plus or minus beta");
      NormalOrientation rec;
      rec.wall = c;
      for (const auto& t : T) {
        // completed facet indexed in K(A) vertex order = cluster_objects(A)
        const auto& verts = cluster_objects(A);
        const auto it = std::lower_bound(verts.begin(), verts.end(), t);
        rec.completed.push_back((int)(it - verts.begin()));
      }
      rec.completing_dim = x.dim();
      rec.sign = (gamma == beta) ? 1 : -1;
      out.orientation.push_back(std::move(rec));
    }
  }
  std::sort(out.orientation.begin(), out.orientation.end(),
            [](const NormalOrientation& a, const NormalOrientation& b) {
              if (a.wall != b.wall) return a.wall < b.wall;
              return a.completing_dim < b.completing_dim;
            });
  return out;
}

std::vector<std::pair<WideSubcat, Int>> boundary_of_cell(const WideSubcat& A) {
  const int k = A.rank();
  std::map<WideSubcat, Int> acc;
  const auto& projs = relative_projectives(A);
  for (const DimVec& beta : indecomposables(A)) {
    if (std::binary_search(projs.begin(), projs.end(), beta)) continue;
    WideSubcat B = perp_category(A, {ClusterObject{beta, false}});
    // Basis change: rows are the simples of B followed by beta, expressed in
    // the simples of A.
    RatMat C(k, RatVec(k));
    for (int i = 0; i < k; ++i) {
      const DimVec& row = (i < k - 1) ? B.simples[i] : beta;
      RatVec c;
      if (!span_coefficients(A.simples, row, c))
        fail("ConsistencyError", "face simple outside the span of the cell");
      if (!is_integral(c))
        fail("NonUnimodular", "face basis change is not integral");
      C[i] = c;
    }
    const Rat det = det_rational(std::move(C));
    if (det != Rat(1) && det != Rat(-1))
      fail("NonUnimodular", "face basis change has determinant " +
                                std::to_string(det.numerator()) + "/" +
                                std::to_string(det.denominator()));
    acc[B] += det.numerator();
  }
  std::vector<std::pair<WideSubcat, Int>> out(acc.begin(), acc.end());
  return out;
}

ChainComplexData chain_complex(const ConvexRootSet& S) {
  ChainComplexData out;
  CategoryInventory inv = enumerate_objects(S);
  out.cells_by_rank = inv.by_rank;
  const int top = (int)out.cells_by_rank.size() - 1;
  out.boundary.assign(top + 1, {});
  for (int r = 1; r <= top; ++r) {
    std::map<WideSubcat, int> index;
    for (int i = 0; i < (int)out.cells_by_rank[r - 1].size(); ++i)
      index[out.cells_by_rank[r - 1][i]] = i;
    IntMat D(out.cells_by_rank[r - 1].size(),
             std::vector<Int>(out.cells_by_rank[r].size(), 0));
    for (int col = 0; col < (int)out.cells_by_rank[r].size(); ++col) {
      for (const auto& [B, coeff] : boundary_of_cell(out.cells_by_rank[r][col])) {
        auto it = index.find(B);
        if (it == index.end())
          fail("ConsistencyError", "boundary cell missing from the inventory");
        D[it->second][col] += coeff;
      }
    }
    out.boundary[r] = std::move(D);
  }
  for (int r = 1; r + 1 <= top; ++r) {
    if (out.boundary[r].empty() || out.boundary[r + 1].empty()) continue;
    IntMat prod = mat_mul(out.boundary[r], out.boundary[r + 1]);
    for (const auto& row : prod) {
      for (Int x : row) {
        if (x != 0)
          fail("BoundarySquareNonzero",
               "consecutive boundary maps do not compose to zero");
      }
    }
  }
  return out;
}

HomologyResult homology(const ChainComplexData& c) {
  std::vector<Int> counts;
  for (const auto& level : c.cells_by_rank)
    counts.push_back((Int)level.size());
  return homology_from_boundaries(counts, c.boundary, 0);
}

}  // namespace cmcat
