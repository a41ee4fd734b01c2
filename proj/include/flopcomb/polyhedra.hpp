#pragma once
#include <vector>

#include "flopcomb/linalg.hpp"

// exact polyhedral cones in small dimension. hcone is a constraint
// description (equalities and weak inequalities through the origin), vcone a
// generator description (extreme rays plus a lineality space). dd_hull
// converts constraints to generators by double description with pivoting on
// the lineality space and an algebraic adjacency test for ray combination.

namespace flopcomb {

struct hcone {
  int dim = 0;
  std::vector<ivec> eqs;
  std::vector<ivec> ineqs;
};

struct vcone {
  int dim = 0;
  std::vector<ivec> rays;      // primitive; canonical form sorts them
  std::vector<ivec> lineality; // canonical subspace basis
};

vcone dd_hull(const hcone& h);

// sort rays, canonicalize the lineality basis; equal cones compare equal
vcone canonical_gens(vcone g);
bool same_gens(const vcone& a, const vcone& b);

int gens_dimension(const vcone& g);

bool contains_point(const hcone& h, const ivec& x);
// relative interior membership: equalities hold, inequalities are strict
bool contains_point_strict(const hcone& h, const ivec& x);

// point in the relative interior: sum of the extreme rays
ivec relint_point(const vcone& g);

int intersection_dimension(const hcone& a, const hcone& b);

} // namespace flopcomb
