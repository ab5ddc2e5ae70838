#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cmcat/linalg.hpp"

using namespace cmcat;

namespace {

RatMat rat_mat(const std::vector<std::vector<Int>>& m) {
  RatMat out(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (Int x : m[i]) out[i].push_back(Rat(x));
  return out;
}

RatVec rat_vec(const std::vector<Int>& v) {
  RatVec out;
  for (Int x : v) out.push_back(Rat(x));
  return out;
}

}  // namespace

TEST_CASE("solve_rational solves a unique system") {
  RatMat M = rat_mat({{2, 1}, {1, -1}});
  RatVec x;
  REQUIRE(solve_rational(M, rat_vec({5, 1}), x));
  CHECK(x == rat_vec({2, 1}));
}

TEST_CASE("solve_rational produces fractional solutions") {
  RatMat M = rat_mat({{2, 0}, {0, 4}});
  RatVec x;
  REQUIRE(solve_rational(M, rat_vec({1, 2}), x));
  CHECK(x[0] == Rat(1, 2));
  CHECK(x[1] == Rat(1, 2));
  CHECK(!is_integral(x));
}

TEST_CASE("solve_rational reports inconsistency") {
  RatMat M = rat_mat({{1, 1}, {2, 2}});
  RatVec x;
  CHECK(!solve_rational(M, rat_vec({1, 3}), x));
}

TEST_CASE("solve_rational zeroes free variables") {
  RatMat M = rat_mat({{1, 1}});
  RatVec x;
  REQUIRE(solve_rational(M, rat_vec({3}), x));
  // One pivot, one free variable set to zero; the product must check out.
  CHECK(x[0] + x[1] == Rat(3));
  CHECK((x[0] == Rat(0) || x[1] == Rat(0)));
}

TEST_CASE("rank and determinant") {
  CHECK(rank_rational(rat_mat({{1, 2}, {2, 4}})) == 1);
  CHECK(rank_rational(rat_mat({{1, 2}, {3, 4}})) == 2);
  CHECK(rank_rational(rat_mat({{0, 0}, {0, 0}})) == 0);
  CHECK(det_rational(rat_mat({{1, 2}, {3, 4}})) == Rat(-2));
  CHECK(det_rational(rat_mat({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) == Rat(30));
  CHECK(det_rational(rat_mat({{1, 1}, {1, 1}})) == Rat(0));
}

TEST_CASE("span_coefficients recovers coordinates") {
  std::vector<DimVec> basis = {{1, 1, 0}, {0, 1, 1}};
  RatVec c;
  REQUIRE(span_coefficients(basis, {2, 3, 1}, c));
  CHECK(c == rat_vec({2, 1}));
  CHECK(!span_coefficients(basis, {1, 0, 0}, c));
}

TEST_CASE("in_rational_span") {
  std::vector<DimVec> vecs = {{1, 0, 1}, {0, 1, 1}};
  CHECK(in_rational_span(vecs, {1, 1, 2}));
  CHECK(in_rational_span(vecs, {0, 0, 0}));
  CHECK(!in_rational_span(vecs, {0, 0, 1}));
}

TEST_CASE("is_integral") {
  CHECK(is_integral(rat_vec({1, -3, 0})));
  CHECK(!is_integral({Rat(1, 2)}));
  CHECK(is_integral({}));
}

TEST_CASE("smith invariants of the classic 3x3 example") {
  IntMat M = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  CHECK(smith_invariants(M) == std::vector<Int>{2, 6, 12});
}

TEST_CASE("smith invariants of simple shapes") {
  CHECK(smith_invariants({{1, 0}, {0, 1}}) == std::vector<Int>{1, 1});
  CHECK(smith_invariants({{0, 0}, {0, 0}}).empty());
  CHECK(smith_invariants({}).empty());
  // gcd of all entries is 1 even though the diagonal reads (2,3).
  CHECK(smith_invariants({{2, 0}, {0, 3}, {0, 0}}) == std::vector<Int>{1, 6});
  CHECK(smith_invariants({{4}}) == std::vector<Int>{4});
  CHECK(smith_invariants({{0, 3, 0}}) == std::vector<Int>{3});
}

TEST_CASE("smith invariants divide in order and match ranks") {
  std::mt19937 rng(20250814);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = 1 + (int)(rng() % 4);
    int cols = 1 + (int)(rng() % 4);
    IntMat M(rows, std::vector<Int>(cols));
    RatMat Mr(rows, RatVec(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        M[i][j] = dist(rng);
        Mr[i][j] = Rat(M[i][j]);
      }
    auto inv = smith_invariants(M);
    for (size_t k = 0; k + 1 < inv.size(); ++k) {
      CHECK(inv[k] > 0);
      CHECK(inv[k + 1] % inv[k] == 0);
    }
    CHECK((int)inv.size() == rank_integer(M));
    CHECK(rank_integer(M) == rank_rational(Mr));
  }
}

TEST_CASE("mat_mul") {
  IntMat A = {{1, 2}, {3, 4}};
  IntMat B = {{0, 1}, {1, 0}};
  CHECK(mat_mul(A, B) == IntMat{{2, 1}, {4, 3}});
  IntMat C = {{1, 2, 3}};
  IntMat D = {{1}, {1}, {1}};
  CHECK(mat_mul(C, D) == IntMat{{6}});
}
