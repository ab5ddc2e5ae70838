#pragma once
// Objects of the cluster morphism category as cells, cluster complexes,
// picture subcomplexes with normal orientations, the cellular chain complex
// and exact integer homology.

#include "cmcat/cvec.hpp"
#include "cmcat/linalg.hpp"
#include "cmcat/picture_group.hpp"

namespace cmcat {

struct CategoryInventory {
  // by_rank[r] lists the wide subcategories of rank r, sorted by simples.
  std::vector<std::vector<WideSubcat>> by_rank;
};

// All wide subcategories generated inside a convex root set, including the
// zero subcategory.
CategoryInventory enumerate_objects(const ConvexRootSet& S);

// Number of cluster morphisms from one wide subcategory onto another:
// partial cluster tilting sets T of `from` with perpendicular category `to`.
Int count_morphisms(const WideSubcat& from, const WideSubcat& to);

struct SimplicialComplexData {
  std::vector<ClusterObject> vertices;
  std::vector<std::vector<int>> facets;  // maximal simplices, sorted indices
};

// Vertices are the cluster objects, simplices the compatible subsets, and
// facets the complete cluster tilting sets.
SimplicialComplexData cluster_complex(const WideSubcat& A);

struct HomologyGroup {
  Int free_rank = 0;
  std::vector<Int> torsion;
};

struct HomologyResult {
  int lowest_degree = 0;
  std::vector<HomologyGroup> groups;  // groups[i] is degree lowest_degree + i
};

// Reduced integer homology (augmented chain complex; the empty complex has
// one reduced class in degree -1).
HomologyResult simplicial_homology(const SimplicialComplexData& c);

struct NormalOrientation {
  std::vector<int> wall;      // vertex indices of the codimension-one simplex
  std::vector<int> completed; // vertex indices of a completing facet in K(A)
  DimVec completing_dim;      // signed dimension vector of the added object
  int sign;                   // +1 when the twist vector at the slot is +beta
};

struct PictureSubcomplex {
  SimplicialComplexData data;
  std::vector<NormalOrientation> orientation;
};

// Induced subcomplex of the cluster complex on the objects whose underlying
// module is hom- and ext-orthogonal to beta, with the wall crossing signs.
PictureSubcomplex picture_subcomplex(const WideSubcat& A, const DimVec& beta);

// Boundary of the cell of A: sum over non relatively projective beta in A of
// det(c) times the perpendicular cell of M_beta, where c expresses the
// simples of the face (and beta last) in the simples of A; each det is +-1.
std::vector<std::pair<WideSubcat, Int>> boundary_of_cell(const WideSubcat& A);

struct ChainComplexData {
  std::vector<std::vector<WideSubcat>> cells_by_rank;
  // boundary[k] maps rank-k cells to rank-(k-1) cells; boundary[0] is empty.
  std::vector<IntMat> boundary;
};

// Assembles the cellular chain complex over a convex root set and verifies
// that consecutive boundaries compose to zero.
ChainComplexData chain_complex(const ConvexRootSet& S);

// Integer homology of the cellular chain complex (not reduced).
HomologyResult homology(const ChainComplexData& c);

}  // namespace cmcat
