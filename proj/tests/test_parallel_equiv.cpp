#include <vector>

#include "doctest.h"
#include "flopcomb/arrangement.hpp"

using namespace flopcomb;

// the parallel kernels must reproduce the serial reference exactly: same
// chambers, same first-discovery order, same verdicts

namespace {

void check_same_enumeration(const std::vector<chamber>& a, const std::vector<chamber>& b) {
  REQUIRE(a.size() == b.size());
  for (size_t k = 0; k < a.size(); ++k) {
    CHECK(chamber_key(a[k]) == chamber_key(b[k]));
    CHECK(a[k].path == b[k].path);
    CHECK(a[k].kset == b[k].kset);
  }
}

} // namespace

TEST_CASE("parallel box enumeration matches the serial reference") {
  for (int sector : {1, -1}) {
    context a1 = make_context("A1~", {});
    check_same_enumeration(enumerate_box_serial(a1, sector, 3, 100000),
                           enumerate_box(a1, sector, 3, 100000));
    context a2 = make_context("A2~", {});
    check_same_enumeration(enumerate_box_serial(a2, sector, 2, 100000),
                           enumerate_box(a2, sector, 2, 100000));
    context d4m = make_context("D4~", {3, 4});
    check_same_enumeration(enumerate_box_serial(d4m, sector, 2, 100000),
                           enumerate_box(d4m, sector, 2, 100000));
  }
  context d4 = make_context("D4~", {});
  check_same_enumeration(enumerate_box_serial(d4, 1, 1, 100000),
                         enumerate_box(d4, 1, 1, 100000));
}

TEST_CASE("parallel level zero enumeration matches the serial reference") {
  for (context c : {make_context("A2~", {}), make_context("A3~", {}),
                    make_context("D4~", {}), make_context("A2~", {2})}) {
    check_same_enumeration(enumerate_sector0_serial(c, 100000),
                           enumerate_sector0(c, 100000));
  }
}

TEST_CASE("parallel fan verification matches the serial reference") {
  context a2 = make_context("A2~", {});
  std::vector<fan_member> good =
      fan_members_of_chambers(a2, enumerate_box_serial(a2, 1, 2, 100000), true);
  CHECK(verify_fan_serial(a2, good, nullptr) == verify_fan(a2, good, nullptr));
  CHECK(verify_fan(a2, good, nullptr));

  context a1 = make_context("A1~", {});
  fan_member quad;
  quad.rays = {{0, 1}, {1, 0}};
  quad.bounds.dim = 2;
  quad.bounds.ineqs = {{1, 0}, {0, 1}};
  fan_member overlap;
  overlap.rays = {{1, 0}, {1, 2}};
  overlap.bounds.dim = 2;
  overlap.bounds.ineqs = {{0, 1}, {2, -1}};
  std::vector<fan_member> bad =
      fan_members_of_chambers(a1, enumerate_box_serial(a1, 1, 2, 100000), true);
  bad.push_back(overlap);
  CHECK(verify_fan_serial(a1, bad, nullptr) == verify_fan(a1, bad, nullptr));
  CHECK_FALSE(verify_fan(a1, bad, nullptr));
}
