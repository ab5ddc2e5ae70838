#pragma once
// Hom and Ext dimensions between exceptional modules, wide subcategories
// presented by their simple objects, and cluster objects (modules plus
// shifted relative projectives).

#include <compare>

#include "cmcat/quiver.hpp"

namespace cmcat {

// For exceptional modules over a finite-type hereditary algebra exactly one
// of Hom and Ext^1 is nonzero, so both split off the Euler form.
Int hom_dim(const QuiverSpec& q, const DimVec& g, const DimVec& d);
Int ext_dim(const QuiverSpec& q, const DimVec& g, const DimVec& d);

struct ClusterObject {
  DimVec root;          // positive root of the ambient quiver
  bool shifted = false; // X = M_root if false, M_root[1] if true

  DimVec dim() const { return shifted ? negated(root) : root; }
  const DimVec& underlying() const { return root; }

  friend bool operator==(const ClusterObject& a, const ClusterObject& b) = default;
  friend std::strong_ordering operator<=>(const ClusterObject& a,
                                          const ClusterObject& b) {
    if (a.shifted != b.shifted)
      return a.shifted ? std::strong_ordering::greater
                       : std::strong_ordering::less;
    return a.root <=> b.root;
  }
};

// Reads a signed dimension vector: all entries >= 0 means a module, all
// entries <= 0 means a shifted object. Checks the underlying root.
ClusterObject object_from_signed_dim(const QuiverSpec& q, const DimVec& sd);

// A wide subcategory, stored as the sorted list of dimension vectors of its
// simple objects. Pairwise hom-orthogonal with acyclic Ext digraph.
struct WideSubcat {
  QuiverSpec ambient;
  std::vector<DimVec> simples;

  int rank() const { return (int)simples.size(); }
  bool operator==(const WideSubcat&) const = default;
  bool operator<(const WideSubcat& o) const {
    if (simples != o.simples) return simples < o.simples;
    return quiver_key(ambient) < quiver_key(o.ambient);
  }
};

WideSubcat full_subcat(const QuiverSpec& q);
WideSubcat make_wide(const QuiverSpec& q, std::vector<DimVec> simples);

// Positive roots in the integer span of the simples, lexicographically
// sorted. Memoized per subcategory.
const std::vector<DimVec>& indecomposables(const WideSubcat& A);

// Recovers the simple objects of a wide subcategory from the full list of
// its indecomposables: the roots that are not sums of two others in the
// list. Verifies the result generates exactly the given list.
std::vector<DimVec> simples_from_roots(const QuiverSpec& q,
                                       std::vector<DimVec> phi);

// Indecomposables gamma with ext(gamma, delta) = 0 for every delta in A.
const std::vector<DimVec>& relative_projectives(const WideSubcat& A);

// Modules plus shifted copies of the relative projectives, sorted by
// (shifted flag, root).
const std::vector<ClusterObject>& cluster_objects(const WideSubcat& A);

// Right perpendicular category of a set of objects inside A: the wide
// subcategory of all X with hom(|t|, X) = ext(|t|, X) = 0 for every t.
WideSubcat perp_category(const WideSubcat& A,
                         const std::vector<ClusterObject>& objs);

// The quiver of a wide subcategory, together with the simple roots realising
// its vertices: basis[i] is the ambient root at vertex i (0-based), chosen
// in an admissible order. The full subcategory yields the ambient quiver
// with the identity indexing.
struct SubQuiver {
  QuiverSpec q;
  std::vector<DimVec> basis;
};
SubQuiver sub_quiver(const WideSubcat& A);

bool in_integer_span_of_simples(const WideSubcat& A, const DimVec& v);

// Rational coordinates of v in the basis of simples; throws ConsistencyError
// when v is outside the span.
RatVec simple_coordinates(const WideSubcat& A, const DimVec& v);

}  // namespace cmcat
