#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "msemi/instances.hpp"
#include "msemi/json_io.hpp"
#include "msemi/sequence.hpp"

namespace msemi::test {

inline IndependentSequence seq_from(const std::string& text) { return sequence_from_json(nlohmann::json::parse(text)); }

/// n independent +-1 signs with mass 1/2 each on (Z, +).
inline IndependentSequence rademacher(std::size_t n) {
  nlohmann::json vars = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) vars.push_back({{"atoms", {{-1, "1/2"}, {1, "1/2"}}}});
  return sequence_from_json({{"instance", "int"}, {"variables", vars}});
}

/// n deterministic steps of the given integer value on (Z, +).
inline IndependentSequence point_steps(std::size_t n, int value) {
  nlohmann::json vars = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) vars.push_back({{"atoms", {{value, "1"}}}});
  return sequence_from_json({{"instance", "int"}, {"variables", vars}});
}

}  // namespace msemi::test
