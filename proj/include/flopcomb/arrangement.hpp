#pragma once
#include <cstddef>
#include <vector>

#include "flopcomb/mutation.hpp"
#include "flopcomb/polyhedra.hpp"
#include "flopcomb/rootlat.hpp"

// the wall and chamber structure of the restricted lattice: simplicial
// chambers on the two open sides (sector +1 / -1) and the finite complete
// fan inside the delta = 0 hyperplane (sector 0). chambers are tracked by a
// full-lattice matrix, a mutated marked subset, and inward wall normals.

namespace flopcomb {

struct chamber {
  int sector = 1;            // +1, -1, or 0
  imat weyl;                 // accumulated full lattice matrix
  std::vector<int> kset;     // mutated marked subset
  std::vector<int> labels;   // crossable wall labels, ascending vertex ids
  std::vector<ivec> normals; // inward normals aligned with labels
  std::vector<int> path;     // wall crossings from the principal chamber
};

chamber principal_chamber(const context& c, int sector);
chamber wall_cross(const context& c, const chamber& ch, int label);

// identity of the cone: sector plus the sorted primitive normal set
std::vector<i64> chamber_key(const chamber& ch);

hcone chamber_bounds(const context& c, const chamber& ch);
// extreme rays aligned with labels: ray k vanishes on every wall but labels[k]
std::vector<ivec> chamber_ray_list(const context& c, const chamber& ch);

// face of the chamber where the walls in tight (label values) collapse
hcone face_bounds(const context& c, const chamber& ch, const std::vector<int>& tight);
std::vector<ivec> face_ray_list(const context& c, const chamber& ch, const std::vector<int>& tight);

// all chambers of the open sector meeting the open box
//   |theta(alpha_i)| <= box * |delta(theta)|  for finite walls i of c
// in first-discovery order. sector 0 enumerates the whole finite fan and
// ignores box. throws resource_cap_error past cap chambers.
std::vector<chamber> enumerate_box_serial(const context& c, int sector, int box, std::size_t cap);
std::vector<chamber> enumerate_box(const context& c, int sector, int box, std::size_t cap);
std::vector<chamber> enumerate_sector0_serial(const context& c, std::size_t cap);
std::vector<chamber> enumerate_sector0(const context& c, std::size_t cap);

struct cone_ref {
  chamber ch;
  std::vector<int> tight; // labels whose walls pass through the located face
};

// chamber (with tight walls) whose closure holds the point; walks by always
// crossing the smallest violated label
cone_ref locate(const context& c, const ivec& theta);

// restricted positive real roots (or root classes, in sector 0) lying on
// opposite closure sides of the two chambers; both must share a sector
std::vector<ivec> separating_roots(const context& c, const chamber& a, const chamber& b);
bool chamber_leq(const context& c, const chamber& a, const chamber& b);

// chambers of the box (plus top itself) below top in the closure order
std::vector<chamber> lower_chambers(const context& c, const chamber& top, int box, std::size_t cap);

struct atomicity_report {
  bool distinct_walls = false;  // crossed hyperplanes pairwise distinct
  bool shortest = false;        // no shorter gallery joins the endpoints
  bool count_matches = false;   // length equals the separating root count
  bool monotone = false;        // separators against the base grow one by one
  bool atomic() const { return distinct_walls && shortest && count_matches && monotone; }
};
atomicity_report check_atomicity(const context& c, const std::vector<int>& path, int sector);

struct fan_member {
  std::vector<ivec> rays; // pointed cone generators, primitive, sorted
  hcone bounds;
};
struct fan_issue {
  int a = -1;
  int b = -1;
};

// cones (optionally with all their faces, deduplicated) ready for verify_fan
std::vector<fan_member> fan_members_of_chambers(const context& c,
                                                const std::vector<chamber>& chs,
                                                bool include_faces);

// checks that every pairwise intersection is a common face. fast path is a
// descent separating by restricted roots; undecided pairs fall back to the
// exact double description test.
bool verify_fan_serial(const context& c, const std::vector<fan_member>& members, fan_issue* issue);
bool verify_fan(const context& c, const std::vector<fan_member>& members, fan_issue* issue);

} // namespace flopcomb
