#pragma once
// Exact linear algebra: rational elimination and integer Smith normal form.

#include "cmcat/basic.hpp"

namespace cmcat {

using RatMat = std::vector<RatVec>;                 // row major
using IntMat = std::vector<std::vector<Int>>;       // row major

// Solve M x = b over the rationals. Returns false when inconsistent. With a
// non-unique solution the free variables are set to zero.
bool solve_rational(RatMat M, RatVec b, RatVec& x);

int rank_rational(RatMat M);

Rat det_rational(RatMat M);

// Coefficients of target in the given basis (assumed linearly independent):
// target = sum c[i] * basis[i]. Returns false when target is not in the span.
bool span_coefficients(const std::vector<DimVec>& basis, const DimVec& target,
                       RatVec& c);

bool in_rational_span(const std::vector<DimVec>& vectors, const DimVec& target);

bool is_integral(const RatVec& v);

// Nonzero diagonal entries d_1 | d_2 | ... of the Smith normal form.
std::vector<Int> smith_invariants(IntMat M);

int rank_integer(const IntMat& M);

IntMat mat_mul(const IntMat& A, const IntMat& B);

}  // namespace cmcat
