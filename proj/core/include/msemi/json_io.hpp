#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "msemi/axioms.hpp"
#include "msemi/engine.hpp"
#include "msemi/scalar_law.hpp"
#include "msemi/sequence.hpp"

namespace msemi {

/// A sequence config: {instance, variables: [{atoms: [[element, "p/q"], ...]} |
/// {sampler: "instance"}], z0?, z1?, engine?, trials?, seed?}. Unknown keys
/// are rejected with ConfigError.
struct SequenceConfig {
  IndependentSequence sequence;
  std::optional<EngineKind> engine;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
};

SequenceConfig sequence_config_from_json(const nlohmann::json& j);
IndependentSequence sequence_from_json(const nlohmann::json& j);

/// Inverse of sequence_from_json for discrete sequences; exact
/// probabilities are written as "p/q" strings, floating ones as numbers.
nlohmann::json sequence_to_json(const IndependentSequence& seq);

/// Probability from a JSON string ("3/10", "0.3": exact) or number (floating).
Real probability_from_json(const nlohmann::json& j);
nlohmann::json probability_to_json(const Real& p);

/// Sorted [[value, probability], ...].
nlohmann::json law_to_json(const ScalarLaw& law);

nlohmann::json axiom_report_to_json(const AxiomReport& report);
nlohmann::json property_set_to_json(const PropertySet& props);

/// Reads a whole JSON file; ConfigError on I/O or parse failure.
nlohmann::json read_json_file(const std::string& path);

}  // namespace msemi
