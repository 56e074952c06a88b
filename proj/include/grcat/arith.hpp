#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>

namespace grcat {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when an exhaustive computation would exceed a configured size cap.
struct size_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integer part of x/m for nonnegative x and positive m.
inline long long floor_div(long long x, long long m) {
  if (m <= 0) throw std::invalid_argument("floor_div: modulus must be positive");
  if (x < 0) throw std::invalid_argument("floor_div: operand must be nonnegative");
  return x / m;
}

/// Remainder of x on division by m, in [0, m).
inline long long rem(long long x, long long m) {
  if (m <= 0) throw std::invalid_argument("rem: modulus must be positive");
  if (x < 0) throw std::invalid_argument("rem: operand must be nonnegative");
  return x - m * (x / m);
}

/// Euclidean remainder for possibly-negative x, in [0, m).
inline long long mod_euclid(long long x, long long m) {
  if (m <= 0) throw std::invalid_argument("mod_euclid: modulus must be positive");
  long long r = x % m;
  return r < 0 ? r + m : r;
}

inline long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

}  // namespace grcat
