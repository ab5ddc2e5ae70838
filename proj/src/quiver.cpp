#include "cmcat/quiver.hpp"

#include <deque>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "json.hpp"

#include "cmcat/linalg.hpp"

namespace cmcat {

QuiverSpec make_quiver(int n, std::vector<Int> f,
                       std::vector<std::vector<Int>> euler) {
  if (n <= 0) fail("InvalidQuiver", "vertex count must be positive");
  if ((int)f.size() != n) fail("InvalidQuiver", "symmetrizer length mismatch");
  if ((int)euler.size() != n) fail("InvalidQuiver", "Euler matrix row count mismatch");
  for (int i = 0; i < n; ++i) {
    if ((int)euler[i].size() != n)
      fail("InvalidQuiver", "Euler matrix column count mismatch");
    if (f[i] <= 0) fail("InvalidQuiver", "symmetrizers must be positive");
    if (euler[i][i] != f[i])
      fail("InvalidQuiver", "diagonal Euler entries must equal the symmetrizers");
    for (int j = i + 1; j < n; ++j) {
      if (euler[i][j] != 0)
        fail("InvalidQuiver",
             "Euler matrix must be lower triangular (vertex order not admissible)");
    }
    for (int j = 0; j < i; ++j) {
      if (euler[i][j] > 0)
        fail("InvalidQuiver", "off-diagonal Euler entries must be nonpositive");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && (euler[i][j] + euler[j][i]) % f[i] != 0)
        fail("InvalidQuiver", "form is not symmetrizable by the given weights");
    }
  }
  QuiverSpec q;
  q.n = n;
  q.f = std::move(f);
  q.euler = std::move(euler);
  return q;
}

namespace {

QuiverSpec quiver_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail("InvalidQuiver", "quiver JSON must be an object");
  if (!j.contains("n") || !j.contains("f"))
    fail("InvalidQuiver", "quiver JSON needs fields n and f");
  const int n = j.at("n").get<int>();
  std::vector<Int> f = j.at("f").get<std::vector<Int>>();
  std::vector<std::vector<Int>> euler;
  if (j.contains("euler")) {
    euler = j.at("euler").get<std::vector<std::vector<Int>>>();
  } else if (j.contains("arrows")) {
    if (n <= 0 || (int)f.size() != n)
      fail("InvalidQuiver", "bad vertex count or symmetrizer list");
    euler.assign(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) euler[i][i] = f[i];
    for (const auto& a : j.at("arrows")) {
      const int from = a.at("from").get<int>();
      const int to = a.at("to").get<int>();
      const Int d = a.contains("dim") ? a.at("dim").get<Int>() : 1;
      if (from < 1 || from > n || to < 1 || to > n)
        fail("InvalidQuiver", "arrow endpoint out of range");
      if (from <= to)
        fail("InvalidQuiver",
             "arrows must point from higher to lower vertex index");
      if (d <= 0) fail("InvalidQuiver", "arrow dimension must be positive");
      euler[from - 1][to - 1] -= d;
    }
  } else {
    fail("InvalidQuiver", "quiver JSON needs either euler or arrows");
  }
  QuiverSpec q = make_quiver(n, std::move(f), std::move(euler));
  validate_finite_type(q);
  return q;
}

}  // namespace

QuiverSpec quiver_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail("InvalidQuiver", std::string("quiver JSON parse failure: ") + e.what());
  }
  return quiver_from_json(j);
}

QuiverSpec quiver_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("InvalidQuiver", "cannot open quiver file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return quiver_from_json_text(ss.str());
}

Int euler_form(const QuiverSpec& q, const DimVec& x, const DimVec& y) {
  if ((int)x.size() != q.n || (int)y.size() != q.n)
    fail("DimensionMismatch", "vector length does not match the quiver");
  Int s = 0;
  for (int i = 0; i < q.n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < q.n; ++j) s += x[i] * q.euler[i][j] * y[j];
  }
  return s;
}

Rat euler_form_rational(const QuiverSpec& q, const RatVec& x, const DimVec& y) {
  if ((int)x.size() != q.n || (int)y.size() != q.n)
    fail("DimensionMismatch", "vector length does not match the quiver");
  Rat s(0);
  for (int i = 0; i < q.n; ++i) {
    for (int j = 0; j < q.n; ++j) s += x[i] * Rat(q.euler[i][j] * y[j]);
  }
  return s;
}

void validate_finite_type(const QuiverSpec& q) {
  // Symmetrized form C_ij = <e_i,e_j> + <e_j,e_i>.
  RatMat C(q.n, RatVec(q.n, Rat(0)));
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j)
      C[i][j] = Rat(q.euler[i][j] + q.euler[j][i]);
  for (int k = 1; k <= q.n; ++k) {
    RatMat minor(k, RatVec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = C[i][j];
    if (det_rational(std::move(minor)) <= Rat(0))
      fail("NotFiniteType",
           "symmetrized Euler form is not positive definite: leading principal "
           "minor " + std::to_string(k) + " is not positive");
  }
}

std::string quiver_key(const QuiverSpec& q) {
  std::string key = std::to_string(q.n) + ";";
  for (Int x : q.f) key += std::to_string(x) + ",";
  key += ";";
  for (const auto& row : q.euler)
    for (Int x : row) key += std::to_string(x) + ",";
  return key;
}

namespace {

struct RootCache {
  std::vector<DimVec> roots;
  std::set<DimVec> root_set;
};

const RootCache& root_cache(const QuiverSpec& q) {
  static std::map<std::string, RootCache> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const std::string key = quiver_key(q);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  validate_finite_type(q);
  // Cartan matrix A_ij = (<e_i,e_j> + <e_j,e_i>) / f_i; simple reflections
  // s_i(x) = x - (sum_j A_ij x_j) e_i generate the root system from the
  // simple roots, and positivity is preserved except when x = e_i.
  std::vector<std::vector<Int>> A(q.n, std::vector<Int>(q.n));
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j)
      A[i][j] = (q.euler[i][j] + q.euler[j][i]) / q.f[i];

  RootCache rc;
  std::deque<DimVec> queue;
  for (int i = 0; i < q.n; ++i) {
    DimVec e(q.n, 0);
    e[i] = 1;
    rc.root_set.insert(e);
    queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    DimVec x = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < q.n; ++i) {
      Int pairing = 0;
      for (int j = 0; j < q.n; ++j) pairing += A[i][j] * x[j];
      DimVec y = x;
      y[i] -= pairing;
      if (!all_nonneg(y)) continue;
      if (rc.root_set.insert(y).second) queue.push_back(std::move(y));
    }
  }
  rc.roots.assign(rc.root_set.begin(), rc.root_set.end());
  auto [pos, inserted] = cache.emplace(key, std::move(rc));
  (void)inserted;
  return pos->second;
}

}  // namespace

const std::vector<DimVec>& positive_roots(const QuiverSpec& q) {
  return root_cache(q).roots;
}

bool is_positive_root(const QuiverSpec& q, const DimVec& v) {
  if ((int)v.size() != q.n)
    fail("DimensionMismatch", "vector length does not match the quiver");
  return root_cache(q).root_set.count(v) > 0;
}

}  // namespace cmcat
