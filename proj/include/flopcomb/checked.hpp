#pragma once
#include <cstdint>
#include <stdexcept>

// exact 64-bit integer arithmetic that refuses to wrap. every arithmetic
// path in the library goes through these helpers so a blown bound surfaces
// as an exception instead of a wrong answer.

namespace flopcomb {

using i64 = std::int64_t;

struct arithmetic_overflow : std::runtime_error {
  arithmetic_overflow() : std::runtime_error("exact integer arithmetic overflowed 64 bits") {}
};

inline i64 ck_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw arithmetic_overflow();
  return r;
}

inline i64 ck_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_overflow();
  return r;
}

inline i64 ck_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_overflow();
  return r;
}

inline i64 ck_neg(i64 a) { return ck_sub(0, a); }

} // namespace flopcomb
