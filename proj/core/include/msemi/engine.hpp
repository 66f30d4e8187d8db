#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "msemi/scalar_law.hpp"
#include "msemi/sequence.hpp"

namespace msemi {

using PathFunctional = std::function<double(const PathTrace&)>;

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

enum class EngineKind { exact, monte_carlo };

/// Engine selection for law computations.
struct EngineSpec {
  EngineKind kind = EngineKind::exact;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultEnumerationCap;

  static EngineSpec exact(std::uint64_t cap = kDefaultEnumerationCap) {
    return {EngineKind::exact, 0, 0, cap};
  }
  static EngineSpec monte_carlo(std::uint64_t trials, std::uint64_t seed) {
    return {EngineKind::monte_carlo, trials, seed, kDefaultEnumerationCap};
  }
};

std::string to_string(EngineKind kind);
EngineKind parse_engine_kind(const std::string& text);

/// Calls `visit(trace, probability)` once per joint outcome of the product
/// measure. Throws EnumerationCapExceeded before doing any work if the number of
/// joint outcomes exceeds `cap`, and DomainError for sampler-backed variables.
void enumerate_paths(const IndependentSequence& seq,
                     const std::function<void(const PathTrace&, const Real&)>& visit,
                     std::uint64_t cap = kDefaultEnumerationCap);

/// Exact laws of several functionals from one enumeration pass.
std::vector<ScalarLaw> exact_functional_laws(const IndependentSequence& seq,
                                             const std::vector<PathFunctional>& functionals,
                                             std::uint64_t cap = kDefaultEnumerationCap);
ScalarLaw exact_functional_law(const IndependentSequence& seq, const PathFunctional& functional,
                               std::uint64_t cap = kDefaultEnumerationCap);

/// Draws one outcome; trial randomness comes from stream_rng(seed, trial).
std::vector<Element> sample_outcome(const IndependentSequence& seq, std::uint64_t seed, std::uint64_t trial);

/// Empirical laws of several functionals over the same simulated paths.
std::vector<ScalarLaw> monte_carlo_laws(const IndependentSequence& seq,
                                        const std::vector<PathFunctional>& functionals,
                                        std::uint64_t trials, std::uint64_t seed);
ScalarLaw monte_carlo_law(const IndependentSequence& seq, const PathFunctional& functional,
                          std::uint64_t trials, std::uint64_t seed);

std::vector<ScalarLaw> functional_laws(const IndependentSequence& seq,
                                       const std::vector<PathFunctional>& functionals, const EngineSpec& engine);

namespace functional {
inline double u_n(const PathTrace& t) { return t.u_n(); }
inline double m_n(const PathTrace& t) { return t.m_n(); }
/// d(z1, z0 S_n).
inline double d_n(const PathTrace& t) { return t.D.back(); }
PathFunctional y(std::size_t j);
}  // namespace functional

ScalarLaw law_of_Un(const IndependentSequence& seq, const EngineSpec& engine = EngineSpec::exact());
ScalarLaw law_of_Mn(const IndependentSequence& seq, const EngineSpec& engine = EngineSpec::exact());

/// Exact law of d(z0, z0 X_j) for a discrete variable, straight from its atoms.
ScalarLaw magnitude_law(const MetricSemigroup& inst, const Element& z0, const DiscreteDistribution& dist);

}  // namespace msemi
