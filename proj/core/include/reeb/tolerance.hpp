#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace reeb {

// All value comparisons in the library go through an absolute tolerance.
inline constexpr double kDefaultTolerance = 1e-9;

inline bool approx_eq(double a, double b, double tol) { return std::fabs(a - b) <= tol; }
inline bool approx_lt(double a, double b, double tol) { return a < b - tol; }
inline bool approx_le(double a, double b, double tol) { return a <= b + tol; }

// Base class for library errors that are not plain precondition violations.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace reeb
