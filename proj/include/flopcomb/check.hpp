#pragma once
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "flopcomb/rootlat.hpp"

// invariant suites behind the cli check command. each suite reruns the laws
// a module relies on at a configured box scale and reports the first
// property that breaks. the fault knob corrupts one cartan entry on a copy
// so the failure path can be exercised on demand.

namespace flopcomb {

struct suite_result {
  std::string name;
  bool pass = true;
  std::string failed_property;
  std::vector<std::pair<std::string, std::string>> details;
};

struct check_report {
  std::string diagram;
  std::vector<int> marked;
  int box = 1;
  bool fault = false;
  bool pass = true;
  std::string failed_property; // suite:property of the first failure
  std::vector<suite_result> suites;
};

check_report run_check(const context& c, int box, std::size_t cap, bool inject_fault);

std::string json_check_report(const check_report& r);

} // namespace flopcomb
