#include <algorithm>
#include <random>

#include "doctest.h"
#include "flopcomb/errors.hpp"
#include "flopcomb/polyhedra.hpp"

using namespace flopcomb;

TEST_CASE("orthant") {
  hcone h{3, {}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  vcone g = dd_hull(h);
  CHECK(g.lineality.empty());
  CHECK(g.rays == std::vector<ivec>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(gens_dimension(g) == 3);
  CHECK(relint_point(g) == ivec{1, 1, 1});
  CHECK(contains_point(h, ivec{1, 2, 3}));
  CHECK(!contains_point(h, ivec{-1, 0, 0}));
  CHECK(contains_point(h, ivec{0, 1, 1}));
  CHECK(!contains_point_strict(h, ivec{0, 1, 1}));
  CHECK(contains_point_strict(h, ivec{1, 1, 1}));
}

TEST_CASE("cone over a square is not simplicial") {
  hcone h{3, {}, {{-1, 0, 1}, {1, 0, 1}, {0, -1, 1}, {0, 1, 1}}};
  vcone g = dd_hull(h);
  CHECK(g.lineality.empty());
  CHECK(g.rays == std::vector<ivec>{{-1, -1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, 1}});
  CHECK(gens_dimension(g) == 3);

  // a redundant constraint changes nothing
  hcone h2 = h;
  h2.ineqs.push_back({0, 0, 1});
  CHECK(same_gens(dd_hull(h2), g));

  // constraint order does not matter after canonicalization
  hcone h3 = h;
  std::reverse(h3.ineqs.begin(), h3.ineqs.end());
  CHECK(same_gens(dd_hull(h3), g));
}

TEST_CASE("lineality is detected") {
  hcone half{2, {}, {{1, 0}}};
  vcone g = dd_hull(half);
  CHECK(g.rays == std::vector<ivec>{{1, 0}});
  CHECK(g.lineality == std::vector<ivec>{{0, 1}});
  CHECK(gens_dimension(g) == 2);

  hcone whole{2, {}, {}};
  vcone w = dd_hull(whole);
  CHECK(w.rays.empty());
  CHECK(gens_dimension(w) == 2);

  // opposite constraint pairs squeeze everything away
  hcone origin{2, {}, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
  vcone o = dd_hull(origin);
  CHECK(o.rays.empty());
  CHECK(o.lineality.empty());
  CHECK(gens_dimension(o) == 0);
}

TEST_CASE("equalities cut before inequalities") {
  hcone h{3, {{1, -1, 0}}, {{1, 0, 0}, {0, 0, 1}}};
  vcone g = dd_hull(h);
  CHECK(g.lineality.empty());
  CHECK(g.rays == std::vector<ivec>{{0, 0, 1}, {1, 1, 0}});
  CHECK(gens_dimension(g) == 2);

  hcone line{2, {{1, 0}}, {}};
  vcone l = dd_hull(line);
  CHECK(l.rays.empty());
  CHECK(l.lineality == std::vector<ivec>{{0, 1}});
  CHECK(gens_dimension(l) == 1);

  hcone edge{2, {{1, 0}}, {{0, 1}}};
  vcone e = dd_hull(edge);
  CHECK(e.rays == std::vector<ivec>{{0, 1}});
  CHECK(e.lineality.empty());
  CHECK(gens_dimension(e) == 1);
}

TEST_CASE("simplicial cones match the adjugate") {
  hcone h{2, {}, {{1, 0}, {1, 2}}};
  vcone g = dd_hull(h);
  CHECK(g.rays == std::vector<ivec>{{0, 1}, {2, -1}});

  // random invertible normal matrices: double description must agree with
  // the adjugate construction of the dual basis
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coin(-3, 3);
  int done = 0;
  while (done < 40) {
    imat n(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) n.at(i, j) = coin(rng);
    i64 dn = det(n);
    if (dn == 0) continue;
    ++done;
    imat adj = adjugate(n);
    std::vector<ivec> want;
    for (int j = 0; j < 3; ++j) {
      ivec col = adj.col(j);
      if (dn < 0) col = vneg(col);
      want.push_back(primitive(col));
    }
    std::sort(want.begin(), want.end());
    hcone hc{3, {}, {n.row(0), n.row(1), n.row(2)}};
    vcone g2 = dd_hull(hc);
    CHECK(g2.lineality.empty());
    CHECK(g2.rays == want);
  }
}

TEST_CASE("dd output satisfies its own constraints") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> coin(-2, 2);
  std::uniform_int_distribution<int> count(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    int d = 3 + trial % 2;
    hcone h;
    h.dim = d;
    int m = count(rng);
    for (int k = 0; k < m; ++k) {
      ivec n(d);
      for (int j = 0; j < d; ++j) n[j] = coin(rng);
      if (!is_zero(n)) h.ineqs.push_back(n);
    }
    vcone g = dd_hull(h);
    for (const ivec& r : g.rays) {
      CHECK(contains_point(h, r));
      CHECK(!is_zero(r));
    }
    for (const ivec& l : g.lineality) {
      CHECK(contains_point(h, l));
      CHECK(contains_point(h, vneg(l)));
    }
    CHECK(contains_point(h, relint_point(g)));
  }
}

TEST_CASE("intersection dimensions of adjacent cones") {
  hcone quadrant{2, {}, {{1, 0}, {0, 1}}};
  hcone below{2, {}, {{1, 0}, {0, -1}}};
  hcone opposite{2, {}, {{-1, 0}, {0, -1}}};
  CHECK(intersection_dimension(quadrant, below) == 1);
  CHECK(intersection_dimension(quadrant, opposite) == 0);
  CHECK(intersection_dimension(quadrant, quadrant) == 2);

  hcone slab{2, {}, {{1, 0}, {-1, 1}}};
  CHECK(intersection_dimension(quadrant, slab) == 2);
}
