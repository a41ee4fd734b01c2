#pragma once
#include <numeric>
#include <string>

#include "flopcomb/checked.hpp"

// minimal exact rational on top of checked 64-bit integers. boost::rational
// over raw int64 wraps silently on overflow, which would violate the
// fail-loudly contract, hence this small hand-rolled type. magnitudes in this
// library stay far below 2^40 (small root coordinates, cone dimensions <= 5).

namespace flopcomb {

struct rat {
  i64 num = 0;
  i64 den = 1; // always > 0, gcd(num, den) == 1

  rat() = default;
  rat(i64 n) : num(n), den(1) {}
  rat(i64 n, i64 d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  void normalize() {
    if (den < 0) {
      num = ck_neg(num);
      den = ck_neg(den);
    }
    i64 g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  friend rat operator+(const rat& a, const rat& b) {
    return rat(ck_add(ck_mul(a.num, b.den), ck_mul(b.num, a.den)), ck_mul(a.den, b.den));
  }
  friend rat operator-(const rat& a, const rat& b) {
    return rat(ck_sub(ck_mul(a.num, b.den), ck_mul(b.num, a.den)), ck_mul(a.den, b.den));
  }
  friend rat operator*(const rat& a, const rat& b) {
    return rat(ck_mul(a.num, b.num), ck_mul(a.den, b.den));
  }
  friend rat operator/(const rat& a, const rat& b) {
    if (b.num == 0) throw std::domain_error("rational division by zero");
    return rat(ck_mul(a.num, b.den), ck_mul(a.den, b.num));
  }
  rat operator-() const { return rat(ck_neg(num), den); }

  rat& operator+=(const rat& b) { return *this = *this + b; }
  rat& operator-=(const rat& b) { return *this = *this - b; }
  rat& operator*=(const rat& b) { return *this = *this * b; }
  rat& operator/=(const rat& b) { return *this = *this / b; }

  friend bool operator==(const rat& a, const rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const rat& a, const rat& b) { return !(a == b); }
  friend bool operator<(const rat& a, const rat& b) {
    return ck_mul(a.num, b.den) < ck_mul(b.num, a.den);
  }
  friend bool operator>(const rat& a, const rat& b) { return b < a; }
  friend bool operator<=(const rat& a, const rat& b) { return !(b < a); }
  friend bool operator>=(const rat& a, const rat& b) { return !(a < b); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

} // namespace flopcomb
