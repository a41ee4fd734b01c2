#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"
#include "flopcomb/errors.hpp"
#include "flopcomb/hearts.hpp"

using namespace flopcomb;

namespace {

context a1_ctx() { return make_context("A1~", {}); }
context a2_ctx() { return make_context("A2~", {}); }

} // namespace

TEST_CASE("tilt and model words") {
  CHECK(tilt_word({}, 0) == "H");
  CHECK(tilt_word({}, -1) == "H[-1]");
  CHECK(tilt_word({0}, 0) == "Ψ₀H");
  CHECK(tilt_word({0, 1}, 0) == "Ψ₀Ψ₁H");
  CHECK(tilt_word({0}, -1) == "Φ₀H[-1]");
  CHECK(model_word({}) == "X");
  CHECK(model_word({1}) == "ν₁X");
  CHECK(model_word({1, 2}) == "ν₂₁X");
}

TEST_CASE("algebraic hearts on the ladder") {
  context c = a1_ctx();
  chamber plus = principal_chamber(c, 1);

  heart_descriptor h0 = heart_of_chamber(c, plus);
  CHECK(h0.kind == heart_kind::algebraic);
  CHECK(h0.path.empty());
  CHECK(h0.shift == 0);
  CHECK(h0.display == "H");

  heart_descriptor hm = heart_of_chamber(c, principal_chamber(c, -1));
  CHECK(hm.shift == -1);
  CHECK(hm.display == "H[-1]");

  chamber up = wall_cross(c, plus, 0);
  heart_descriptor h1 = heart_of_chamber(c, up);
  CHECK(h1.path == std::vector<int>{0});
  CHECK(h1.display == "Ψ₀H");

  heart_descriptor h2 = heart_of_chamber(c, wall_cross(c, up, 1));
  CHECK(h2.path == std::vector<int>{0, 1});
  CHECK(h2.display == "Ψ₀Ψ₁H");

  // a wasteful construction path still yields the least geodesic
  chamber wander = wall_cross(c, wall_cross(c, up, 0), 1);
  heart_descriptor h3 = heart_of_chamber(c, wander);
  CHECK(h3.path == std::vector<int>{1});
  CHECK(h3.display == "Ψ₁H");

  CHECK_THROWS_AS(heart_of_chamber(c, principal_chamber(c, 0)), config_error);
}

TEST_CASE("enumerated paths are already least geodesics") {
  context c = a2_ctx();
  for (const chamber& ch : enumerate_box_serial(c, 1, 2, 100000))
    CHECK(heart_of_chamber(c, ch).path == ch.path);
  for (const chamber& ch : enumerate_sector0_serial(c, 100000))
    CHECK(geometric_interval(c, ch).path == ch.path);
}

TEST_CASE("geometric intervals name their models") {
  context a1 = a1_ctx();
  heart_descriptor g0 = geometric_interval(a1, principal_chamber(a1, 0));
  CHECK(g0.kind == heart_kind::geometric_interval);
  CHECK(g0.path.empty());
  CHECK(g0.display == "X");

  context a2 = a2_ctx();
  chamber z = principal_chamber(a2, 0);
  CHECK(geometric_interval(a2, wall_cross(a2, z, 1)).display == "ν₁X");
  CHECK(geometric_interval(a2, wall_cross(a2, wall_cross(a2, z, 1), 2)).display == "ν₂₁X");

  CHECK_THROWS_AS(geometric_interval(a2, principal_chamber(a2, 1)), config_error);
}

TEST_CASE("partial contraction cones") {
  context a2 = a2_ctx();
  chamber z = principal_chamber(a2, 0);

  cone_ref ray;
  ray.ch = z;
  ray.tight = {1};
  heart_descriptor s = semigeometric_of_cone(a2, ray);
  CHECK(s.kind == heart_kind::semi_geometric);
  CHECK(s.path.empty());
  CHECK(s.contracted == std::vector<int>{1});
  CHECK(s.components == std::vector<std::vector<int>>{{1}});
  CHECK(s.display == "zeroper(X,Y)");

  // the same ray reached from the neighbouring chamber resolves identically
  cone_ref other;
  other.ch = wall_cross(a2, z, 1);
  other.tight = {1};
  CHECK(face_ray_list(a2, other.ch, other.tight) == face_ray_list(a2, ray.ch, ray.tight));
  heart_descriptor s2 = semigeometric_of_cone(a2, other);
  CHECK(s2.path == s.path);
  CHECK(s2.contracted == s.contracted);
  CHECK(s2.rays == s.rays);

  CHECK_THROWS_AS(semigeometric_of_cone(a2, locate(a2, {1, -2, 1})), config_error);
}

TEST_CASE("contracted curves split into intersection components") {
  context d4 = make_context("D4~", {});
  cone_ref two;
  two.ch = principal_chamber(d4, 0);
  two.tight = {1, 3};
  heart_descriptor s = semigeometric_of_cone(d4, two);
  CHECK(s.contracted == std::vector<int>{1, 3});
  CHECK(s.components == std::vector<std::vector<int>>{{1}, {3}});

  // with the middle vertex marked the two curves meet in the model
  context d4m = make_context("D4~", {2});
  cone_ref joined;
  joined.ch = principal_chamber(d4m, 0);
  joined.tight = {1, 3};
  heart_descriptor sj = semigeometric_of_cone(d4m, joined);
  CHECK(sj.components == std::vector<std::vector<int>>{{1, 3}});
}

TEST_CASE("classification is total and rejects non heart cones") {
  context a1 = a1_ctx();
  CHECK(classify_cone(a1, locate(a1, {1, 1})).kind == heart_kind::algebraic);
  CHECK(classify_cone(a1, locate(a1, {1, -1})).kind == heart_kind::geometric_interval);
  CHECK_THROWS_AS(classify_cone(a1, locate(a1, {1, 0})), not_heart_cone_error);
  CHECK_THROWS_AS(classify_cone(a1, locate(a1, {0, 0})), not_heart_cone_error);

  context a2 = a2_ctx();
  CHECK(classify_cone(a2, locate(a2, {-1, 0, 1})).kind == heart_kind::semi_geometric);
}

TEST_CASE("brick labels of covers and intervals") {
  context c = a1_ctx();
  chamber plus = principal_chamber(c, 1);
  chamber up = wall_cross(c, plus, 0);
  chamber down = wall_cross(c, plus, 1);

  brick_class b0 = brick_label(c, plus, up);
  CHECK(b0.cls == ivec{1, 0});
  CHECK_FALSE(b0.imaginary);
  brick_class b1 = brick_label(c, plus, down);
  CHECK(b1.cls == ivec{0, 1});

  chamber zero = principal_chamber(c, 0);
  brick_class bi = brick_label(c, zero, zero);
  CHECK(bi.cls == ivec{1, 1});
  CHECK(bi.imaginary);

  CHECK_THROWS_AS(brick_label(c, plus, wall_cross(c, up, 1)), config_error);
  CHECK_THROWS_AS(brick_label(c, up, plus), config_error);
  CHECK_THROWS_AS(brick_label(c, plus, zero), config_error);
}

TEST_CASE("numerical intervals") {
  context a1 = a1_ctx();
  auto [alo, ahi] = numerical_interval(a1, {1, 1});
  CHECK(alo.display == "H");
  CHECK(ahi.display == "H");

  auto [glo, ghi] = numerical_interval(a1, {-1, 1});
  CHECK(glo.display == "anticoh X");
  CHECK(ghi.display == "coh X");

  context a2 = a2_ctx();
  auto [slo, shi] = numerical_interval(a2, {-1, 0, 1});
  CHECK(slo.display == "antizeroper(X,Y)");
  CHECK(shi.display == "zeroper(X,Y)");

  CHECK_THROWS_AS(numerical_interval(a1, {0, 0}), not_heart_cone_error);
}

TEST_CASE("twist action on classes") {
  context a1 = a1_ctx();
  CHECK(pic_action_on_class(a1, {}, {1}, {0, 1}) == ivec{1, 2});
  CHECK(pic_action_on_class(a1, {}, {1}, {1, 0}) == ivec{0, -1});
  CHECK(pic_action_on_class(a1, {}, {1}, {1, 1}) == ivec{1, 1});
  CHECK(pic_action_on_class(a1, {}, {-2}, {0, 1}) == ivec{-2, -1});

  context a2 = a2_ctx();
  CHECK(pic_action_on_class(a2, {}, {1, 0}, {0, 1, 0}) == ivec{1, 2, 1});
  CHECK(pic_action_on_class(a2, {}, {1, 0}, {0, 0, 1}) == ivec{0, 0, 1});
  CHECK(pic_action_on_class(a2, {}, {2, 3}, {1, 1, 1}) == ivec{1, 1, 1});

  // additive in the degrees
  for (ivec v : {ivec{1, 0, 0}, ivec{0, 1, 0}, ivec{2, -1, 3}}) {
    ivec ab = pic_action_on_class(a2, {}, {1, 0}, pic_action_on_class(a2, {}, {0, 1}, v));
    CHECK(ab == pic_action_on_class(a2, {}, {1, 1}, v));
  }

  // the same twist expressed over a flopped model
  context a2m = make_context("A2~", {2});
  CHECK(pic_action_on_class(a2m, {1}, {1}, {0, 1}) == ivec{-1, 0});

  CHECK_THROWS_AS(pic_action_on_class(a1, {}, {1, 2}, {0, 1}), config_error);
  CHECK_THROWS_AS(pic_action_on_class(a1, {}, {1}, {0, 1, 0}), config_error);
}

TEST_CASE("twist translation of chambers") {
  context c = a1_ctx();
  chamber plus = principal_chamber(c, 1);
  chamber up = wall_cross(c, plus, 0);
  chamber up2 = wall_cross(c, up, 1);
  chamber down = wall_cross(c, plus, 1);

  CHECK(chamber_key(pic_translate_chamber(c, {}, {0}, plus)) == chamber_key(plus));
  CHECK(chamber_key(pic_translate_chamber(c, {}, {1}, plus)) == chamber_key(up));
  CHECK(chamber_key(pic_translate_chamber(c, {}, {2}, plus)) == chamber_key(up2));
  CHECK(chamber_key(pic_translate_chamber(c, {}, {-1}, plus)) == chamber_key(down));

  // monotone in the degree for effective twists
  for (i64 d1 = 0; d1 <= 2; ++d1)
    for (i64 d2 = 0; d2 <= 2; ++d2) {
      chamber t1 = pic_translate_chamber(c, {}, {d1}, plus);
      chamber t2 = pic_translate_chamber(c, {}, {d2}, plus);
      CHECK(chamber_leq(c, t1, t2) == (d1 <= d2));
    }

  // group law on a rank two lattice of degrees
  context a2 = a2_ctx();
  chamber base = principal_chamber(a2, 1);
  chamber two_step =
      pic_translate_chamber(a2, {}, {1, 0}, pic_translate_chamber(a2, {}, {0, 1}, base));
  CHECK(chamber_key(two_step) == chamber_key(pic_translate_chamber(a2, {}, {1, 1}, base)));
}

TEST_CASE("effective twists drift toward the level zero fan") {
  // the translate by n*d keeps a point of the form (dual lift) + n * (ray
  // combination weighted by d) inside itself, for every effective d
  context a1 = a1_ctx();
  {
    std::vector<ivec> zrays = chamber_ray_list(a1, principal_chamber(a1, 0));
    ivec zstar = qvec_clear_denominators(delta_star(a1, zrays));
    i64 scale = dot(delta_restricted(a1), zstar);
    REQUIRE(scale > 0);
    chamber plus = principal_chamber(a1, 1);
    for (i64 n = 1; n <= 4; ++n) {
      chamber tn = pic_translate_chamber(a1, {}, {n}, plus);
      ivec q = vadd(zstar, vscale(n * scale, zrays[0]));
      for (const ivec& nm : tn.normals) CHECK(dot(nm, q) >= 0);
    }
  }
  context a2 = a2_ctx();
  {
    std::vector<ivec> zrays = chamber_ray_list(a2, principal_chamber(a2, 0));
    ivec zstar = qvec_clear_denominators(delta_star(a2, zrays));
    i64 scale = dot(delta_restricted(a2), zstar);
    REQUIRE(scale > 0);
    chamber plus = principal_chamber(a2, 1);
    for (std::vector<i64> d : {std::vector<i64>{1, 0}, {0, 1}, {1, 1}, {2, 1}})
      for (i64 n = 1; n <= 3; ++n) {
        chamber tn = pic_translate_chamber(a2, {}, {n * d[0], n * d[1]}, plus);
        ivec dir(a2.dim(), 0);
        for (size_t j = 0; j < d.size(); ++j) dir = vadd(dir, vscale(d[j], zrays[j]));
        ivec q = vadd(zstar, vscale(n * scale, dir));
        for (const ivec& nm : tn.normals) CHECK(dot(nm, q) >= 0);
      }
  }
}

TEST_CASE("movable fans") {
  context a1 = a1_ctx();
  std::vector<movable_cone> f1 = movable_fan(a1, 100000);
  REQUIRE(f1.size() == 2);
  CHECK(f1[0].model == "X");
  CHECK(f1[1].model == "ν₁X");

  context a2 = a2_ctx();
  std::vector<movable_cone> f2 = movable_fan(a2, 100000);
  REQUIRE(f2.size() == 6);
  std::set<std::string> models;
  for (const movable_cone& mc : f2) models.insert(mc.model);
  CHECK(models == std::set<std::string>{"X", "ν₁X", "ν₂X", "ν₂₁X", "ν₁₂X", "ν₁₂₁X"});
}
