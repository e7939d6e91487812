#pragma once

// Overflow-checked 64-bit arithmetic and an exact rational type built on it.
// All invariant computations in this library go through these helpers; an
// overflow raises OverflowError instead of wrapping.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "nsemi/errors.hpp"

namespace nsemi {

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

// Floor division for possibly negative numerators, exact for den > 0.
inline int64_t floor_div(int64_t num, int64_t den) {
  if (den <= 0) throw BadRange("floor_div requires positive denominator");
  int64_t q = num / den;
  if ((num % den) != 0 && num < 0) --q;
  return q;
}

inline int64_t checked_binomial(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  int64_t r = 1;
  for (int64_t i = 1; i <= k; ++i) {
    // r * (n-k+i) is divisible by i once folded in ascending order
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

// Exact rational with int64 components, always normalized (den > 0, gcd = 1).
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(int64_t n, int64_t d) : num_(n), den_(d) { normalize(); }

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  int64_t as_integer() const {
    if (den_ != 1) throw IntegralityViolation("rational " + str() + " is not an integer");
    return num_;
  }

  Rational operator-() const { return Rational(checked_mul(num_, -1), den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    int64_t g = std::gcd(a.den_, b.den_);
    int64_t bd = b.den_ / g;
    return Rational(checked_add(checked_mul(a.num_, bd), checked_mul(b.num_, a.den_ / g)),
                    checked_mul(a.den_, bd));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    int64_t g1 = std::gcd(std::abs(a.num_), b.den_);
    int64_t g2 = std::gcd(std::abs(b.num_), a.den_);
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2),
                    checked_mul(a.den_ / g2, b.den_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw BadRange("division by zero rational");
    return a * Rational(b.den_, b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  int64_t floor() const { return floor_div(num_, den_); }
  Rational frac() const { return *this - Rational(floor()); }
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // Prints "p/q", or just "p" when integral.
  std::string str() const {
    std::ostringstream os;
    os << num_;
    if (den_ != 1) os << '/' << den_;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_ == 0) throw BadRange("rational with zero denominator");
    if (den_ < 0) {
      num_ = checked_mul(num_, -1);
      den_ = checked_mul(den_, -1);
    }
    int64_t g = std::gcd(std::abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  int64_t num_;
  int64_t den_;
};

}  // namespace nsemi
