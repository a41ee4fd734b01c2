#pragma once
#include <stdexcept>
#include <string>

// error taxonomy mirrored by the cli exit codes:
//   invariant_error -> 1, config_error -> 2, resource_cap_error -> 3,
//   not_heart_cone_error -> 4. arithmetic_overflow also maps to 1.

namespace flopcomb {

struct config_error : std::runtime_error {
  explicit config_error(const std::string& m) : std::runtime_error(m) {}
};

struct invariant_error : std::runtime_error {
  explicit invariant_error(const std::string& m) : std::runtime_error(m) {}
};

struct resource_cap_error : std::runtime_error {
  explicit resource_cap_error(const std::string& m) : std::runtime_error(m) {}
};

struct not_heart_cone_error : std::runtime_error {
  explicit not_heart_cone_error(const std::string& m) : std::runtime_error(m) {}
};

} // namespace flopcomb
