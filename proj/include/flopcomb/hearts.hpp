#pragma once
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "flopcomb/arrangement.hpp"

// symbolic descriptors for the hearts attached to cones of the arrangement:
// full-dimensional chambers on the open sides carry tilted module categories,
// maximal level-zero cones carry sheaf hearts of birational models, and the
// smaller nonzero level-zero cones carry partially contracted hearts.

namespace flopcomb {

enum class heart_kind { algebraic, geometric_interval, semi_geometric };

struct heart_descriptor {
  heart_kind kind = heart_kind::algebraic;
  int sector = 1;
  std::vector<int> path;    // lexicographically least reduced crossing word
  int shift = 0;            // 0 or -1, algebraic only
  std::vector<int> contracted;                // vanishing curve labels, semi geometric
  std::vector<std::vector<int>> components;   // contracted set split by curve adjacency
  std::vector<ivec> rays;   // cone generators, primitive and sorted
  std::string display;
};

// tilt and model naming used in tables: unicode subscripts on the functor
// letters, model words collapse the reversed path under a single letter
std::string tilt_word(const std::vector<int>& path, int shift);
std::string model_word(const std::vector<int>& path);

heart_descriptor heart_of_chamber(const context& c, const chamber& ch);
heart_descriptor geometric_interval(const context& c, const chamber& ch);
heart_descriptor semigeometric_of_cone(const context& c, const cone_ref& ref);

// dispatch by sector and dimension; rejects the zero cone and the proper
// faces of open-sector chambers
heart_descriptor classify_cone(const context& c, const cone_ref& ref);

struct brick_class {
  ivec cls;
  bool imaginary = false;
};

// unique separating class of a covering pair on an open side, or the
// imaginary class for the symbolic covers inside one geometric interval
brick_class brick_label(const context& c, const chamber& a, const chamber& b);

// lower and upper tilting bounds of the cone holding theta
std::pair<heart_descriptor, heart_descriptor> numerical_interval(const context& c,
                                                                 const ivec& theta);

// twist action of a degree tuple (indexed by the finite walls of the model
// at the end of model_path) on restricted lattice classes
ivec pic_action_on_class(const context& c, const std::vector<int>& model_path,
                         const std::vector<i64>& degrees, const ivec& v);
chamber pic_translate_chamber(const context& c, const std::vector<int>& model_path,
                              const std::vector<i64>& degrees, const chamber& ch);

struct movable_cone {
  chamber ch;
  std::vector<int> model_path;
  std::string model;
};

// the finite level-zero fan with one birational model per maximal cone;
// asserts the fan axioms before returning
std::vector<movable_cone> movable_fan(const context& c, std::size_t cap);

} // namespace flopcomb
