#pragma once
// Explicit quiver representations over small prime fields, built through
// reflection functors; an independent Hom oracle; submodule roots; and
// membership in semi-invariant stability domains.

#include "cmcat/homext.hpp"

namespace cmcat {

// A representation of a simply laced quiver over F_p. Arrows are listed as
// (from, to) vertex pairs in fixed order; maps[a] is a dims[to] x dims[from]
// matrix acting on column vectors.
struct ExplicitRep {
  int p = 0;
  std::vector<int> dims;
  std::vector<std::pair<int, int>> arrows;
  std::vector<std::vector<std::vector<int>>> maps;
};

// The exceptional representation with dimension vector gamma, constructed by
// reflecting gamma to a simple root and building back up with cokernel
// reflection functors. Throws NotSimplyLaced when a weight exceeds one.
ExplicitRep build_rep(const QuiverSpec& q, const DimVec& gamma, int p);

// Solution space dimension of the intertwining equations; independent of the
// Euler form split.
int oracle_hom(const QuiverSpec& q, const DimVec& g, const DimVec& d, int p);
int oracle_ext(const QuiverSpec& q, const DimVec& g, const DimVec& d, int p);

// Positive roots gamma' <= gamma with an injective morphism
// M_gamma' -> M_gamma, decided over F_101 and re-checked over F_103.
std::vector<DimVec> subroots(const QuiverSpec& q, const DimVec& gamma);

struct StabilityVerdict {
  bool member = false;
  std::string violated;  // "orthogonality" or "subroot" when not a member
  DimVec witness;        // offending subroot
};

// v lies in the stability domain of gamma relative to A when <v, gamma> = 0
// and <v, gamma'> <= 0 for every submodule root gamma' of gamma lying in the
// integer span of the simples of A.
StabilityVerdict in_stability_domain(const WideSubcat& A, const DimVec& gamma,
                                     const RatVec& v);

}  // namespace cmcat
