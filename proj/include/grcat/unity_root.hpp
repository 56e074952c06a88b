#pragma once

#include <string>

#include "grcat/arith.hpp"

namespace grcat {

/// A root of unity, written additively as an element of Q/Z: the reduced
/// fraction num/den with 0 <= num < den stands for the scalar exp(2*pi*i*num/den).
/// The trivial scalar 1 is 0/1. Addition here is multiplication of scalars.
class UnityRoot {
 public:
  UnityRoot() : num_(0), den_(1) {}

  /// num/den reduced modulo 1; den must be positive.
  UnityRoot(BigInt num, BigInt den) {
    if (den <= 0) throw std::invalid_argument("UnityRoot: order must be positive");
    num %= den;
    if (num < 0) num += den;
    BigInt g = boost::multiprecision::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  /// Order as an element of Q/Z (equals den in canonical form).
  const BigInt& order() const { return den_; }

  bool is_trivial() const { return num_ == 0; }

  UnityRoot operator+(const UnityRoot& o) const {
    return UnityRoot(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  UnityRoot operator-() const { return UnityRoot(-num_, den_); }
  UnityRoot operator-(const UnityRoot& o) const { return *this + (-o); }
  UnityRoot& operator+=(const UnityRoot& o) { return *this = *this + o; }
  UnityRoot& operator-=(const UnityRoot& o) { return *this = *this - o; }

  /// Integer multiple k*(num/den) mod 1, i.e. the k-th power of the scalar.
  UnityRoot times(const BigInt& k) const { return UnityRoot(num_ * k, den_); }

  friend bool operator==(const UnityRoot& a, const UnityRoot& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const UnityRoot& a, const UnityRoot& b) { return !(a == b); }
  /// Rational order on [0,1); used for canonical enumeration of solutions.
  friend bool operator<(const UnityRoot& a, const UnityRoot& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  std::string str() const { return num_.str() + "/" + den_.str(); }

 private:
  BigInt num_, den_;
};

/// zeta_order^num: the canonical root (num mod order)/order.
inline UnityRoot root(const BigInt& num, const BigInt& order) { return UnityRoot(num, order); }

inline UnityRoot operator*(const BigInt& k, const UnityRoot& r) { return r.times(k); }

}  // namespace grcat
