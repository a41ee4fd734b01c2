#pragma once
#include <vector>

#include "flopcomb/diagram.hpp"

// mutation of marked vertex subsets of an affine diagram. mutating J at an
// unmarked vertex i adjoins i and removes the partner vertex that the
// longest element of the parabolic on J ∪ {i} pairs with i.

namespace flopcomb {

// partner of i inside J ∪ {i}
int iota(const diagram& d, const std::vector<int>& J, int i);

std::vector<int> mutate(const diagram& d, const std::vector<int>& J, int i);

// steps applied left to right: the first entry mutates J itself
std::vector<int> apply_path(const diagram& d, std::vector<int> J,
                            const std::vector<int>& steps);

// steps that walk apply_path(d, J, steps) back to J, in application order
std::vector<int> reverse_path(const diagram& d, std::vector<int> J,
                              const std::vector<int>& steps);

struct mutation_arrow {
  int from = 0;  // node index
  int label = 0; // vertex mutated at
  int to = 0;    // node index
};

struct mutation_class {
  diagram d;
  std::vector<std::vector<int>> nodes; // sorted subsets, discovery order
  std::vector<mutation_arrow> arrows;  // ordered by (from, label)

  int node_index(const std::vector<int>& J) const; // -1 when absent
};

// breadth first closure from J0; mutations at each node are tried in
// increasing vertex order. throws resource_cap_error past node_cap nodes.
mutation_class enumerate_mutation_class(const diagram& d, std::vector<int> J0,
                                        std::size_t node_cap);

} // namespace flopcomb
