#pragma once
// Shared scalar types, dimension vectors, and the error taxonomy.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace cmcat {

using Int = long long;
using DimVec = std::vector<Int>;
using Rat = boost::rational<Int>;
using RatVec = std::vector<Rat>;

// Recoverable failures carry a stable machine-readable kind string, one of:
//   InvalidQuiver, NotFiniteType, NonRootInput, DimensionMismatch,
//   ConsistencyError, UniquenessViolation, DegenerateInput,
//   IntegralityViolation, SignViolation, NotConvex, NotOrderable,
//   SingularSystem, NonUnimodular, BoundarySquareNonzero, NotSimplyLaced,
//   NotPermutable, UsageError.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
  throw DomainError(kind, msg);
}

inline std::string vec_str(const DimVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

inline bool all_nonneg(const DimVec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; });
}

inline bool all_nonpos(const DimVec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x <= 0; });
}

inline bool is_zero_vec(const DimVec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

inline DimVec negated(const DimVec& v) {
  DimVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

inline DimVec vec_add(const DimVec& a, const DimVec& b) {
  DimVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline DimVec vec_sub(const DimVec& a, const DimVec& b) {
  DimVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace cmcat
