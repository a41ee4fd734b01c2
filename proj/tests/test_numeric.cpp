#include <doctest.h>

#include "flopcomb/linalg.hpp"

using namespace flopcomb;

TEST_CASE("checked arithmetic raises instead of wrapping") {
  CHECK(ck_add(2, 3) == 5);
  CHECK(ck_mul(-4, 5) == -20);
  CHECK_THROWS_AS(ck_add(INT64_MAX, 1), arithmetic_overflow);
  CHECK_THROWS_AS(ck_mul(INT64_MAX, 2), arithmetic_overflow);
  CHECK_THROWS_AS(ck_neg(INT64_MIN), arithmetic_overflow);
}

TEST_CASE("rational normalization and ordering") {
  rat a(2, 4);
  CHECK(a.num == 1);
  CHECK(a.den == 2);
  rat b(-3, -6);
  CHECK(b == a);
  rat c(1, -2);
  CHECK(c.num == -1);
  CHECK(c.den == 2);
  CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
  CHECK(rat(1, 3) < rat(1, 2));
  CHECK(rat(-5) < rat(1, 1000000));
  CHECK((rat(7, 3) * rat(3, 7)) == rat(1));
  CHECK_THROWS(rat(1, 0));
  CHECK_THROWS(rat(1) / rat(0));
  CHECK(rat(0, 5).den == 1);
}

TEST_CASE("determinant and adjugate") {
  imat m(3, 3);
  i64 vals[9] = {2, -1, 0, -1, 2, -1, 0, -1, 2};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = vals[3 * i + j];
  CHECK(det(m) == 4); // tridiagonal (2,-1) determinant for size 3
  imat adj = adjugate(m);
  imat prod = adj * m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(prod.at(i, j) == (i == j ? 4 : 0));

  imat sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(0, 1) = 2;
  sing.at(1, 0) = 2;
  sing.at(1, 1) = 4;
  CHECK(det(sing) == 0);
}

TEST_CASE("rational solve and kernel") {
  // x + y = 3, x - y = 1  =>  x = 2, y = 1
  std::vector<ivec> A = {{1, 1}, {1, -1}};
  auto x = solve(A, {rat(3), rat(1)}, 2);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == rat(2));
  CHECK((*x)[1] == rat(1));

  // inconsistent
  std::vector<ivec> B = {{1, 1}, {2, 2}};
  CHECK_FALSE(solve(B, {rat(1), rat(3)}, 2).has_value());

  // kernel of (1,1,1) is 2-dimensional
  auto k = kernel_basis({{1, 1, 1}}, 3);
  CHECK(k.size() == 2);
  for (const auto& v : k) CHECK(dot({1, 1, 1}, v) == 0);
}

TEST_CASE("span canonicalization is basis independent") {
  auto s1 = span_canonical({{1, 0, 1}, {0, 1, 1}}, 3);
  auto s2 = span_canonical({{1, 1, 2}, {2, 1, 3}, {1, 0, 1}}, 3);
  CHECK(s1 == s2);
  auto s3 = span_canonical({{1, 0, 0}}, 3);
  CHECK(s1 != s3);
}

TEST_CASE("primitive and line canonical forms") {
  CHECK(primitive(ivec{4, -6, 2}) == ivec{2, -3, 1});
  CHECK(line_canonical(ivec{-4, 6, -2}) == ivec{2, -3, 1});
  CHECK(primitive(ivec{0, 0}) == ivec{0, 0});
}
