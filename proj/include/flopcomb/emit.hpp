#pragma once
#include <cstddef>
#include <string>
#include <vector>

#include "flopcomb/hearts.hpp"

// deterministic artifact builders behind the cli. everything returns the
// complete output as one string so callers never leave half written files.

namespace flopcomb {

std::string dot_mutation_class(const mutation_class& mc);
std::string json_mutation_class(const mutation_class& mc);
std::string csv_mutation_class(const mutation_class& mc);

struct hasse_edge {
  int from = 0;
  int to = 0;
  std::vector<ivec> roots; // separating classes, singletons for true covers
};

// chambers of one sector together with the closure order data the reports
// need: separators against the principal chamber and the hasse edges of the
// enumerated subposet
struct chamber_listing {
  context c;
  int sector = 1;
  int box = 1;
  std::vector<chamber> chambers;
  std::vector<std::vector<ivec>> sep_principal;
  std::vector<hasse_edge> hasse;
};

chamber_listing build_chamber_listing(const context& c, int sector, int box,
                                      std::size_t cap);

std::string json_chambers(const chamber_listing& l);
std::string csv_chambers(const chamber_listing& l);
std::string dot_chambers(const chamber_listing& l);
// slice picture at delta = sector (sector 0 draws the plane delta = 0);
// needs a 2 or 3 dimensional restricted lattice
std::string svg_chambers(const chamber_listing& l);

std::string json_heart(const heart_descriptor& h);

} // namespace flopcomb
