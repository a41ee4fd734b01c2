#pragma once
#include <array>
#include <string>
#include <vector>

#include "flopcomb/linalg.hpp"

// simply laced dynkin diagrams (A/D/E) and their affine extensions, with the
// fixed vertex numbering documented in the readme:
//   A_n : chain 1..n, affine vertex 0 adjacent to both ends (double bond when n=1)
//   D_n : chain 1..n-1, vertex n attached to n-2, affine vertex 0 attached to 2
//   E_6 : chain 1..5, vertex 6 attached to 3, affine vertex 0 attached to 6
//   E_7 : chain 1..6, vertex 7 attached to 3, affine vertex 0 attached to 1
//   E_8 : chain 1..7, vertex 8 attached to 5, affine vertex 0 attached to 1

namespace flopcomb {

enum class family : char { A = 'A', D = 'D', E = 'E' };

struct diagram {
  family fam = family::A;
  int rank = 0;
  bool affine = false;
  std::vector<int> vertices;             // sorted ids, 0..rank (affine) or 1..rank
  std::vector<std::array<int, 2>> edges; // each stored with smaller id first
  imat cartan;                           // indexed by position in `vertices`
  ivec kac;                              // affine only, indexed by vertex id

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  bool has_vertex(int v) const;
  int index_of(int v) const; // position in `vertices`
  i64 pairing(int vi, int vj) const;
  bool adjacent(int vi, int vj) const { return vi != vj && pairing(vi, vj) != 0; }
  std::string name() const;
};

diagram build_diagram(family f, int rank, bool affine);

// names like "A1~", "E7~" (affine) or "D4" (finite)
diagram parse_diagram(const std::string& name);

// primitive positive generator of the cartan kernel, indexed by vertex id
ivec kac_labels(const diagram& d);

// vertex id -> vertex id action of the longest weyl element; identity for
// affine diagrams by convention. indexed by vertex id (entry -1 unused).
std::vector<int> longest_involution(const diagram& d);

} // namespace flopcomb
