#pragma once
// Valued quivers with their Euler form, finite-type validation, and the
// positive root system computed by reflection closure.

#include "cmcat/basic.hpp"

namespace cmcat {

// Vertices are 0-based internally. The Euler matrix is lower triangular:
// euler[i][i] = f[i] > 0, euler[i][j] = 0 for i < j, euler[i][j] <= 0 for
// i > j. Immutable after construction.
struct QuiverSpec {
  int n = 0;
  std::vector<Int> f;
  std::vector<std::vector<Int>> euler;

  bool operator==(const QuiverSpec&) const = default;
};

// Checks the structural invariants above plus symmetrizability
// (f[i] divides euler[i][j] + euler[j][i]); throws InvalidQuiver.
QuiverSpec make_quiver(int n, std::vector<Int> f,
                       std::vector<std::vector<Int>> euler);

// Accepts {"n":..,"f":[..],"euler":[[..]]} or {"n":..,"f":[..],
// "arrows":[{"from":i,"to":j,"dim":d}]} with 1-based vertices; arrows must
// point from higher to lower vertex index. Validates finite type.
QuiverSpec quiver_from_json_text(const std::string& text);
QuiverSpec quiver_from_json_file(const std::string& path);

Int euler_form(const QuiverSpec& q, const DimVec& x, const DimVec& y);
Rat euler_form_rational(const QuiverSpec& q, const RatVec& x, const DimVec& y);

// Positive definiteness of the symmetrized form, checked through leading
// principal minors; throws NotFiniteType naming the first failing minor.
void validate_finite_type(const QuiverSpec& q);

// All positive roots, lexicographically sorted. Memoized per quiver.
const std::vector<DimVec>& positive_roots(const QuiverSpec& q);

bool is_positive_root(const QuiverSpec& q, const DimVec& v);

// Content-based key used by the per-quiver caches.
std::string quiver_key(const QuiverSpec& q);

}  // namespace cmcat
