#include "cmcat/linalg.hpp"

#include <cstdlib>

namespace cmcat {

namespace {

// Row echelon form in place; returns pivot column per pivot row.
std::vector<int> echelon(RatMat& M) {
  const int rows = (int)M.size();
  const int cols = rows ? (int)M[0].size() : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i) {
      if (M[i][c] != Rat(0)) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(M[r], M[sel]);
    const Rat inv = Rat(1) / M[r][c];
    for (int j = c; j < cols; ++j) M[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == Rat(0)) continue;
      const Rat factor = M[i][c];
      for (int j = c; j < cols; ++j) M[i][j] -= factor * M[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

bool solve_rational(RatMat M, RatVec b, RatVec& x) {
  const int rows = (int)M.size();
  const int cols = rows ? (int)M[0].size() : 0;
  for (int i = 0; i < rows; ++i) M[i].push_back(b[i]);
  RatMat aug = std::move(M);
  std::vector<int> pivots = echelon(aug);
  for (size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == cols) return false;  // pivot in the constant column
  }
  // Rows of zeros with nonzero constant are caught above (such a row would
  // produce a pivot in the constant column).
  x.assign(cols, Rat(0));
  for (size_t k = 0; k < pivots.size(); ++k) {
    x[pivots[k]] = aug[k][cols];
    // free variables stay zero, and with full echelon form the pivot rows
    // have zeros at every other pivot column, so back substitution reduces
    // to subtracting the free-variable terms, all of which are zero.
  }
  return true;
}

int rank_rational(RatMat M) { return (int)echelon(M).size(); }

Rat det_rational(RatMat M) {
  const int n = (int)M.size();
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i) {
      if (M[i][c] != Rat(0)) {
        sel = i;
        break;
      }
    }
    if (sel < 0) return Rat(0);
    if (sel != c) {
      std::swap(M[c], M[sel]);
      det = -det;
    }
    det *= M[c][c];
    const Rat inv = Rat(1) / M[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (M[i][c] == Rat(0)) continue;
      const Rat factor = M[i][c] * inv;
      for (int j = c; j < n; ++j) M[i][j] -= factor * M[c][j];
    }
  }
  return det;
}

bool span_coefficients(const std::vector<DimVec>& basis, const DimVec& target,
                       RatVec& c) {
  const int dim = (int)target.size();
  const int k = (int)basis.size();
  RatMat M(dim, RatVec(k, Rat(0)));
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < dim; ++i) M[i][j] = Rat(basis[j][i]);
  }
  RatVec b(dim);
  for (int i = 0; i < dim; ++i) b[i] = Rat(target[i]);
  return solve_rational(std::move(M), std::move(b), c);
}

bool in_rational_span(const std::vector<DimVec>& vectors, const DimVec& target) {
  RatVec c;
  return span_coefficients(vectors, target, c);
}

bool is_integral(const RatVec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rat& r) { return r.denominator() == 1; });
}

std::vector<Int> smith_invariants(IntMat M) {
  const int rows = (int)M.size();
  const int cols = rows ? (int)M[0].size() : 0;
  std::vector<Int> divisors;
  int t = 0;
  while (t < rows && t < cols) {
    // Pivot: nonzero entry of smallest magnitude in the active submatrix.
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i) {
      for (int j = t; j < cols; ++j) {
        if (M[i][j] != 0 &&
            (pr < 0 || std::llabs(M[i][j]) < std::llabs(M[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    std::swap(M[t], M[pr]);
    for (int i = t; i < rows; ++i) std::swap(M[i][t], M[i][pc]);

    bool stable = false;
    while (!stable) {
      stable = true;
      for (int i = t + 1; i < rows; ++i) {
        if (M[i][t] == 0) continue;
        const Int q = M[i][t] / M[t][t];
        for (int j = t; j < cols; ++j) M[i][j] -= q * M[t][j];
        if (M[i][t] != 0) {  // remainder becomes the smaller pivot
          std::swap(M[t], M[i]);
          stable = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (M[t][j] == 0) continue;
        const Int q = M[t][j] / M[t][t];
        for (int i = t; i < rows; ++i) M[i][j] -= q * M[i][t];
        if (M[t][j] != 0) {
          for (int i = t; i < rows; ++i) std::swap(M[i][t], M[i][j]);
          stable = false;
        }
      }
      if (stable) {
        // Divisibility: the pivot must divide every remaining entry.
        for (int i = t + 1; i < rows && stable; ++i) {
          for (int j = t + 1; j < cols && stable; ++j) {
            if (M[i][j] % M[t][t] != 0) {
              for (int jj = t; jj < cols; ++jj) M[t][jj] += M[i][jj];
              stable = false;
            }
          }
        }
      }
    }
    if (M[t][t] < 0) {
      for (int j = t; j < cols; ++j) M[t][j] = -M[t][j];
    }
    divisors.push_back(M[t][t]);
    ++t;
  }
  return divisors;
}

int rank_integer(const IntMat& M) {
  RatMat R(M.size());
  for (size_t i = 0; i < M.size(); ++i) {
    R[i].reserve(M[i].size());
    for (Int x : M[i]) R[i].push_back(Rat(x));
  }
  return rank_rational(std::move(R));
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
  const int n = (int)A.size();
  const int m = n ? (int)A[0].size() : 0;
  const int k = B.empty() ? 0 : (int)B[0].size();
  IntMat C(n, std::vector<Int>(k, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (A[i][j] == 0) continue;
      for (int l = 0; l < k; ++l) C[i][l] += A[i][j] * B[j][l];
    }
  }
  return C;
}

}  // namespace cmcat
