#pragma once
// Partial cluster tilting sets: compatibility, enumeration, mutation, the
// transfer bijection sigma, and composition of cluster morphisms.

#include "cmcat/homext.hpp"

namespace cmcat {

// Ext-compatibility of two cluster objects of A: two modules must have no
// extensions either way, a shifted object P[1] is compatible with a module Y
// when hom(P, Y) = 0, and two shifted objects are always compatible.
bool compatible(const WideSubcat& A, const ClusterObject& X,
                const ClusterObject& Y);

// Checks objects are distinct cluster objects of A and pairwise compatible;
// returns them sorted. Throws ConsistencyError otherwise.
std::vector<ClusterObject> validate_tilting(const WideSubcat& A,
                                            std::vector<ClusterObject> objs);

// All partial cluster tilting sets of size k, each sorted, listed in
// lexicographic order of the index set into cluster_objects(A).
std::vector<std::vector<ClusterObject>> enumerate_tilting_sets(
    const WideSubcat& A, int k);

// Replaces the j-th object (0-based, into the sorted set) of a complete
// cluster tilting set by the unique other completion.
std::vector<ClusterObject> mutate(const WideSubcat& A,
                                  const std::vector<ClusterObject>& T, int j);

// sigma_T(S): for S a cluster object of perp_category(A, T), the unique
// cluster object X of A, compatible with T and not in T, whose dimension
// vector is congruent to dim S modulo the span of the dim T_i.
ClusterObject sigma(const WideSubcat& A, const std::vector<ClusterObject>& T,
                    const ClusterObject& S);

// Inverse transfer: for X compatible with T and not in T, the unique cluster
// object S of perp_category(A, T) with dim X - dim S in the span of dim T_i.
ClusterObject sigma_inverse(const WideSubcat& A,
                            const std::vector<ClusterObject>& T,
                            const ClusterObject& X);

// A morphism [T]: A -> perp_category(A, T) in the cluster morphism category.
struct ClusterMorphism {
  WideSubcat source;
  std::vector<ClusterObject> tilting;  // sorted partial cluster tilting set
};

ClusterMorphism make_morphism(WideSubcat source,
                              std::vector<ClusterObject> tilting);
WideSubcat morphism_target(const ClusterMorphism& m);
ClusterMorphism identity_morphism(const WideSubcat& A);

// g after f: requires source(g) == target(f); the composite is
// [f.tilting united with sigma_{f.tilting}(g.tilting)].
ClusterMorphism compose(const ClusterMorphism& g, const ClusterMorphism& f);

bool morphism_equal(const ClusterMorphism& a, const ClusterMorphism& b);

}  // namespace cmcat
