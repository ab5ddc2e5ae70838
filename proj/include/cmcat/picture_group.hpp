#pragma once
// Convex sets of positive roots, picture group presentations, the HNN
// extension data of the maximal root, and abelianized invariants.

#include <optional>
#include <utility>

#include "cmcat/homext.hpp"

namespace cmcat {

struct ConvexCheck {
  bool ok = false;
  std::string reason;            // "closure" or "order" when not ok
  std::vector<DimVec> witness;   // offending generating subset, or a cycle
  DimVec missing;                // root forced by closure but absent
  std::vector<DimVec> order;     // admissible total order when ok
};

// A set S of positive roots is convex when (1) for every subset of S forming
// the simples of a wide subcategory all indecomposables of that subcategory
// lie in S, and (2) S carries a total order with hom(beta, alpha) = 0 and
// ext(alpha, beta) = 0 whenever alpha comes before beta. The order is built
// from the back, taking the lexicographically largest available root, so the
// last element is the canonical maximal one.
ConvexCheck is_convex(const QuiverSpec& q, std::vector<DimVec> roots);

struct ConvexRootSet {
  QuiverSpec q;
  std::vector<DimVec> roots;  // sorted
  std::vector<DimVec> order;  // admissible total order, maximal element last
};

ConvexRootSet make_convex(const QuiverSpec& q, std::vector<DimVec> roots);

// All roots of the form x*a + y*b with integer x, y >= 0, sorted by
// ascending ratio x:y (so b is first and a, with y = 0, last).
std::vector<DimVec> ab_product(const QuiverSpec& q, const DimVec& a,
                               const DimVec& b);

struct Word {
  // Product of syllables x(root)^exponent, left to right.
  std::vector<std::pair<DimVec, int>> syllables;
};

struct Relation {
  Word lhs, rhs;
};

// One generator x(beta) per root; one relation x(a)x(b) = product over
// ab_product(a, b) per hom-orthogonal pair with ext(a, b) = 0; for fully
// orthogonal pairs only the lexicographically ordered copy is kept.
struct GroupPresentation {
  std::vector<DimVec> generators;
  std::vector<Relation> relations;
};

GroupPresentation presentation(const ConvexRootSet& S);

struct HnnData {
  DimVec omega;          // the maximal root of the order
  ConvexRootSet s0;      // S minus omega
  ConvexRootSet s_omega; // roots of S orthogonal to omega under the form
  // psi(x(alpha)) for alpha in s_omega: the roots x*alpha + y*omega with
  // x > 0, by decreasing y/x, ending in alpha itself.
  std::vector<std::pair<DimVec, std::vector<DimVec>>> psi;
  // Retraction G(S0) -> G(S_omega): x(gamma) fixed for gamma in s_omega,
  // killed otherwise (empty image word).
  std::vector<std::pair<DimVec, std::vector<DimVec>>> retraction;
};

HnnData hnn_data(const ConvexRootSet& S);

// Verifies that for every alpha in s_omega the presentation of S contains a
// relation equivalent (as a cyclic word up to inversion) to
// x(alpha) x(omega) = x(omega) * psi(x(alpha)).
bool hnn_relation_check(const ConvexRootSet& S);

struct AbelianInvariants {
  Int free_rank = 0;
  std::vector<Int> torsion;  // elementary divisors greater than one
};

AbelianInvariants abelianization(const GroupPresentation& p);

}  // namespace cmcat
