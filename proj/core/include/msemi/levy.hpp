#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "msemi/sequence.hpp"

namespace msemi {

/// Step magnitude schedule:
///   geometric:F    step j uniform on [-F^-j, F^-j] per coordinate
///   constant:uniform   step j drawn from the instance sampler
///   zero           every step is the identity
///   mixed:K        instance sampler up to index K, geometric:3 afterwards
struct Schedule {
  enum class Kind { geometric, uniform, zero, mixed };
  Kind kind = Kind::geometric;
  double factor = 3;
  std::size_t switch_index = 0;

  static Schedule parse(const std::string& text);
  std::string to_string() const;
};

struct WalkConfig {
  InstancePtr instance;
  Schedule schedule;
  std::size_t horizon = 200;
  std::size_t paths = 100;
  std::uint64_t seed = 0;
  std::vector<double> eps{0.1, 0.03, 0.01};
  std::vector<std::size_t> windows{10, 50, 100, 150};
  /// Fraction of paths above which a gap counts as persistent.
  double threshold = 0.05;

  /// Throws ConfigError on a short horizon, empty or non-decreasing grids.
  void validate() const;
  nlohmann::json to_json() const;
};

/// Independent steps X_1..X_horizon following the schedule, as sampler variables.
IndependentSequence walk_sequence(const WalkConfig& cfg);

/// One trace per path; path i draws from stream_rng(seed, i).
std::vector<PathTrace> simulate_walk(const WalkConfig& cfg);

enum class Verdict { converging, diverging, inconclusive };
std::string to_string(Verdict v);

struct ConvergenceVerdict {
  std::vector<std::size_t> windows;
  std::vector<double> eps;
  /// gaps[path][w] = sup_{n0 < m < n <= N} d(S_m, S_n) at n0 = windows[w].
  std::vector<std::vector<double>> gaps;
  /// sup_{n > n0} d(S_n0, S_n).
  std::vector<std::vector<double>> q;
  /// Fraction of paths with gap >= eps[e] at windows[w], indexed [e][w].
  std::vector<std::vector<double>> exceed;
  std::vector<Verdict> path_verdicts;
  Verdict verdict = Verdict::inconclusive;
  double inconclusive_fraction = 0;
  double threshold = 0.05;

  double max_gap(std::size_t window_index) const;
  nlohmann::json to_json() const;
};

/// Pathwise Cauchy criterion (an empirical stand-in for almost sure behaviour).
/// A path is converging when its gap at the largest window is below the
/// smallest eps, diverging when it is at least the largest eps.
ConvergenceVerdict detect_convergence(const MetricSemigroup& inst, const std::vector<PathTrace>& traces,
                                      const std::vector<double>& eps, const std::vector<std::size_t>& windows,
                                      double threshold = 0.05);

struct LevyReport {
  WalkConfig config;
  ConvergenceVerdict pathwise;
  /// Fraction of paths with d(S_n0, S_N) >= eps, indexed [e][w].
  std::vector<std::vector<double>> in_probability_exceed;
  Verdict in_probability = Verdict::inconclusive;
  /// Share of (eps, window) cells on which both criteria agree that the
  /// exceedance fraction is below the threshold (or that it is not).
  double agreement = 0;
  /// Share of paths classified alike by d(S_n0, S_N) and by the Cauchy gap at the largest window.
  double path_agreement = 0;

  nlohmann::json to_json() const;
};

LevyReport levy_equivalence_experiment(const WalkConfig& cfg);

/// CSV rows "path,j,distance" with distance = d(z1, z0 S_j).
void write_trace_csv(std::ostream& out, const std::vector<PathTrace>& traces);

}  // namespace msemi
