#pragma once
#include <string>
#include <vector>

#include "flopcomb/diagram.hpp"

// exact root-lattice arithmetic over an affine diagram: simple reflections,
// longest parabolic elements, real-root enumeration by delta level, the
// restricted lattice attached to a marked vertex subset, and the wall
// crossing lattice isomorphisms between neighbouring marked subsets.
//
// full-lattice vectors are indexed by position in diagram::vertices.
// restricted vectors are indexed by position in context::walls.

namespace flopcomb {

struct context {
  diagram d;               // affine ambient diagram
  std::vector<int> marked; // sorted proper subset of the vertex set
  std::vector<int> walls;  // complement of marked, sorted

  int dim() const { return static_cast<int>(walls.size()); }
  int full_dim() const { return d.n_vertices(); }
  bool is_wall(int v) const;
  int wall_index(int v) const; // position of vertex id v in walls
  std::vector<int> finite_walls() const; // walls excluding vertex 0
};

context make_context(diagram d, std::vector<int> marked);
context make_context(const std::string& diagram_name, std::vector<int> marked);

// --- full lattice ---

ivec simple_root(const diagram& d, int i); // by vertex id
ivec delta_vec(const diagram& d);          // kac labels as a lattice vector
ivec simple_reflection(const diagram& d, int i, const ivec& v);
imat reflection_matrix(const diagram& d, int i);
// word [i1,...,ik] denotes s_{i1} ∘ ... ∘ s_{ik}; matrix product in that order
imat word_matrix(const diagram& d, const std::vector<int>& word);
ivec apply_word(const diagram& d, const std::vector<int>& word, ivec v);

struct weyl_element {
  imat m;
  std::vector<int> word; // reduced, vertex ids
};

// longest element of the parabolic on J (must span a finite subgraph,
// i.e. J must be a proper subset of the affine vertex set)
weyl_element longest_element_word(const diagram& d, const std::vector<int>& J);

// induced involution on J: w_J(alpha_i) = -alpha_{inv(i)}; identity when J is
// the whole affine vertex set (infinite group convention)
std::vector<int> subgraph_involution(const diagram& d, const std::vector<int>& J);

// positive roots of the finite part (coordinate of vertex 0 is zero)
std::vector<ivec> finite_positive_roots(const diagram& d);

// all real roots with delta level <= level_bound. the level-0 layer consists
// of the finite positive roots together with (delta - finite positive roots);
// level k adds k*delta; negatives mirror the positives.
std::vector<ivec> enumerate_real_roots(const diagram& d, int level_bound);
bool is_positive_root_vec(const ivec& v);

// --- restricted lattice ---

ivec restrict_vec(const context& c, const ivec& full);
ivec lift_vec(const context& c, const ivec& restricted); // zeros on marked slots
ivec delta_restricted(const context& c);
ivec wall_simple(const context& c, int wall_vertex); // restricted simple root

// nonzero projections of finite positive roots, deduplicated and sorted;
// these cut the sector-0 hyperplanes
std::vector<ivec> restricted_root_classes(const context& c);

// positive restricted real roots up to the given delta level, deduplicated
std::vector<ivec> positive_restricted_roots(const context& c, int level_bound);

struct linear_map {
  std::vector<int> source_walls;
  std::vector<int> target_walls;
  imat m; // |target_walls| x |source_walls|
};

// wall crossing isomorphism from the lattice of the mutated context (marked
// set mutated at i) to the lattice of c
linear_map phi_map(const context& c, int i);

// composite of phi maps along a mutation path starting at c (first step
// applied to c); source is the lattice of the path's end context
linear_map phi_path(const context& c, const std::vector<int>& steps);

// unique functional with value 1 on restricted delta and 0 on each basis
// vector; returned in dual coordinates of the standard restricted basis
qvec delta_star(const context& c, const std::vector<ivec>& model_basis);

} // namespace flopcomb
