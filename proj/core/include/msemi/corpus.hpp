#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "msemi/sequence.hpp"

namespace msemi {

struct CorpusSpec {
  std::size_t count = 10000;
  std::size_t max_length = 5;
  std::size_t max_support = 3;
  std::vector<std::string> instances{"cyclic:6", "sym:3", "graphgroup:3", "int", "complete:posreal"};
  std::uint64_t seed = 1;
  std::uint64_t cap = 10'000'000;

  nlohmann::json to_json() const;
  static CorpusSpec from_json(const nlohmann::json& j);
};

/// Seeded random sequences with rational weights. Entry i uses instance
/// i mod |instances| and draws from stream_rng(seed, i), so prefixes of a
/// larger corpus coincide with smaller corpora of the same seed.
///
/// Atoms on real-valued carriers are multiples of 1/2 in [1/2, 4] so that
/// every sum of distances stays exactly representable.
std::vector<IndependentSequence> generate_corpus(const CorpusSpec& spec);

nlohmann::json corpus_to_json(const CorpusSpec& spec, const std::vector<IndependentSequence>& corpus);

}  // namespace msemi
