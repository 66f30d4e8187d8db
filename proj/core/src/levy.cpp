#include "msemi/levy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "msemi/engine.hpp"
#include "msemi/errors.hpp"
#include "msemi/instances.hpp"
#include "msemi/parallel.hpp"

namespace msemi {

Schedule Schedule::parse(const std::string& text) {
  Schedule s;
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  try {
    if (head == "geometric") {
      s.kind = Kind::geometric;
      s.factor = arg.empty() ? 3.0 : std::stod(arg);
      if (!(s.factor > 1)) throw ConfigError("geometric factor must exceed 1");
      return s;
    }
    if (head == "constant" && (arg.empty() || arg == "uniform")) {
      s.kind = Kind::uniform;
      return s;
    }
    if (head == "zero" && arg.empty()) {
      s.kind = Kind::zero;
      return s;
    }
    if (head == "mixed") {
      s.kind = Kind::mixed;
      s.switch_index = arg.empty() ? 50 : std::stoul(arg);
      return s;
    }
  } catch (const std::logic_error&) {
    throw ConfigError("malformed schedule '" + text + "'");
  }
  throw ConfigError("unknown schedule '" + text + "'");
}

std::string Schedule::to_string() const {
  switch (kind) {
    case Kind::geometric: {
      std::string f = std::to_string(factor);
      f.erase(f.find_last_not_of('0') + 1);
      if (!f.empty() && f.back() == '.') f.pop_back();
      return "geometric:" + f;
    }
    case Kind::uniform:
      return "constant:uniform";
    case Kind::zero:
      return "zero";
    case Kind::mixed:
      return "mixed:" + std::to_string(switch_index);
  }
  return "";
}

void WalkConfig::validate() const {
  if (!instance) throw ConfigError("walk needs an instance");
  if (paths == 0) throw ConfigError("walk needs at least one path");
  if (windows.empty() || eps.empty()) throw ConfigError("walk needs non-empty eps and window grids");
  for (std::size_t i = 0; i < windows.size(); ++i) {
    if (windows[i] == 0 || (i > 0 && windows[i] <= windows[i - 1])) {
      throw ConfigError("windows must be positive and increasing");
    }
  }
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0) || (i > 0 && eps[i] >= eps[i - 1])) throw ConfigError("eps grid must be positive and decreasing");
  }
  if (horizon < windows.back() + 2) {
    throw ConfigError("horizon " + std::to_string(horizon) + " too short for window " + std::to_string(windows.back()));
  }
  if (!(threshold > 0 && threshold < 1)) throw ConfigError("threshold must lie in (0, 1)");
}

nlohmann::json WalkConfig::to_json() const {
  return {{"instance", instance ? instance->name() : ""},
          {"schedule", schedule.to_string()},
          {"horizon", horizon},
          {"paths", paths},
          {"seed", seed},
          {"eps", eps},
          {"windows", windows},
          {"threshold", threshold}};
}

namespace {

Element scaled_step(const InstancePtr& inst, double a, Rng& rng) {
  if (const auto* t = dynamic_cast<const Torus*>(inst.get())) {
    std::vector<double> c(t->dim());
    for (auto& x : c) x = a * (2 * uniform01(rng) - 1);
    return t->wrap(std::move(c));
  }
  if (const auto* r = dynamic_cast<const RealVectorSpace*>(inst.get())) {
    std::vector<double> c(r->dim());
    for (auto& x : c) x = a * (2 * uniform01(rng) - 1);
    return Element::vector(std::move(c));
  }
  throw ConfigError("shrinking schedules need a torus or a real vector space, not " + inst->name());
}

}  // namespace

IndependentSequence walk_sequence(const WalkConfig& cfg) {
  cfg.validate();
  const auto& inst = cfg.instance;
  auto id = inst->identity();
  if (!id) throw ConfigError("walks need an instance with an identity");
  if (cfg.schedule.kind != Schedule::Kind::zero && !inst->has_sampler()) {
    throw ConfigError("instance " + inst->name() + " has no sampler");
  }
  if (cfg.schedule.kind == Schedule::Kind::geometric || cfg.schedule.kind == Schedule::Kind::mixed) {
    Rng probe(0);
    scaled_step(inst, 1.0, probe);  // fails early on unsupported instances
  }
  std::vector<Variable> vars;
  vars.reserve(cfg.horizon);
  for (std::size_t j = 1; j <= cfg.horizon; ++j) {
    bool shrinking = cfg.schedule.kind == Schedule::Kind::geometric ||
                     (cfg.schedule.kind == Schedule::Kind::mixed && j > cfg.schedule.switch_index);
    if (cfg.schedule.kind == Schedule::Kind::zero) {
      vars.emplace_back(DiscreteDistribution::point_mass(*id));
    } else if (shrinking) {
      double factor = cfg.schedule.kind == Schedule::Kind::mixed ? 3.0 : cfg.schedule.factor;
      double a = std::pow(factor, -static_cast<double>(j));
      vars.emplace_back(Sampler{[inst, a](Rng& rng) { return scaled_step(inst, a, rng); }, "scaled"});
    } else {
      vars.emplace_back(Sampler{[inst](Rng& rng) { return inst->sample(rng); }, "instance"});
    }
  }
  return IndependentSequence(inst, std::move(vars), *id, *id);
}

std::vector<PathTrace> simulate_walk(const WalkConfig& cfg) {
  auto seq = walk_sequence(cfg);
  std::vector<PathTrace> out(cfg.paths);
  parallel_for(cfg.paths, [&](std::size_t i) { out[i] = partial_products(seq, sample_outcome(seq, cfg.seed, i)); });
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::converging:
      return "converging";
    case Verdict::diverging:
      return "diverging";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "";
}

namespace {

/// converging if every eps falls below the threshold at the largest window,
/// diverging if some eps stays at or above it on every window.
Verdict classify(const std::vector<std::vector<double>>& exceed, double threshold) {
  bool all_small = true;
  bool some_persistent = false;
  for (const auto& row : exceed) {
    all_small = all_small && row.back() < threshold;
    some_persistent = some_persistent ||
                      std::all_of(row.begin(), row.end(), [&](double f) { return f >= threshold; });
  }
  if (all_small) return Verdict::converging;
  if (some_persistent) return Verdict::diverging;
  return Verdict::inconclusive;
}

std::vector<std::vector<double>> exceedance(const std::vector<std::vector<double>>& values,
                                            const std::vector<double>& eps, std::size_t windows) {
  std::vector<std::vector<double>> out(eps.size(), std::vector<double>(windows, 0.0));
  for (std::size_t e = 0; e < eps.size(); ++e) {
    for (std::size_t w = 0; w < windows; ++w) {
      std::size_t hits = 0;
      for (const auto& v : values) hits += v[w] >= eps[e] ? 1 : 0;
      out[e][w] = static_cast<double>(hits) / static_cast<double>(values.size());
    }
  }
  return out;
}

Verdict path_class(double value, const std::vector<double>& eps) {
  if (value < eps.back()) return Verdict::converging;
  if (value >= eps.front()) return Verdict::diverging;
  return Verdict::inconclusive;
}

nlohmann::json table_json(const std::vector<std::vector<double>>& t) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : t) j.push_back(row);
  return j;
}

}  // namespace

double ConvergenceVerdict::max_gap(std::size_t window_index) const {
  double m = 0;
  for (const auto& g : gaps) m = std::max(m, g.at(window_index));
  return m;
}

nlohmann::json ConvergenceVerdict::to_json() const {
  nlohmann::json max_gaps = nlohmann::json::array();
  for (std::size_t w = 0; w < windows.size(); ++w) max_gaps.push_back(max_gap(w));
  return {{"verdict", to_string(verdict)},
          {"criterion", "pathwise Cauchy gap at finite horizon (empirical proxy for almost sure convergence)"},
          {"windows", windows},
          {"eps", eps},
          {"threshold", threshold},
          {"exceed_fraction", table_json(exceed)},
          {"max_gap", max_gaps},
          {"inconclusive_fraction", inconclusive_fraction}};
}

ConvergenceVerdict detect_convergence(const MetricSemigroup& inst, const std::vector<PathTrace>& traces,
                                      const std::vector<double>& eps, const std::vector<std::size_t>& windows,
                                      double threshold) {
  if (traces.empty()) throw DomainError("convergence detection needs at least one trace");
  const std::size_t N = traces.front().size();
  for (const auto& t : traces) {
    if (t.size() != N) throw DomainError("traces do not share a horizon");
  }
  if (windows.empty() || eps.empty()) throw DomainError("convergence detection needs eps and windows");
  if (N < windows.back() + 2) throw DomainError("horizon too short for the largest window");
  ConvergenceVerdict v;
  v.windows = windows;
  v.eps = eps;
  v.threshold = threshold;
  v.gaps.assign(traces.size(), std::vector<double>(windows.size()));
  v.q.assign(traces.size(), std::vector<double>(windows.size()));
  parallel_for(traces.size(), [&](std::size_t p) {
    const auto& S = traces[p].S;  // S[k-1] = S_k
    // row[m] = max_{m < n <= N} d(S_m, S_n), 1-based m.
    std::vector<double> row(N + 1, 0.0);
    for (std::size_t m = 1; m < N; ++m) {
      double r = 0;
      for (std::size_t n = m + 1; n <= N; ++n) r = std::max(r, inst.distance(S[m - 1], S[n - 1]));
      row[m] = r;
    }
    std::vector<double> suffix(N + 1, 0.0);  // suffix[k] = max_{m >= k} row[m]
    for (std::size_t m = N; m-- > 1;) suffix[m] = std::max(suffix[m + 1], row[m]);
    for (std::size_t w = 0; w < windows.size(); ++w) {
      v.gaps[p][w] = suffix[windows[w] + 1];
      v.q[p][w] = row[windows[w]];
    }
  });
  v.exceed = exceedance(v.gaps, eps, windows.size());
  std::size_t inconclusive = 0;
  for (const auto& g : v.gaps) {
    v.path_verdicts.push_back(path_class(g.back(), eps));
    inconclusive += v.path_verdicts.back() == Verdict::inconclusive ? 1 : 0;
  }
  v.inconclusive_fraction = static_cast<double>(inconclusive) / static_cast<double>(traces.size());
  v.verdict = classify(v.exceed, threshold);
  return v;
}

nlohmann::json LevyReport::to_json() const {
  return {{"config", config.to_json()},
          {"pathwise", pathwise.to_json()},
          {"in_probability",
           {{"verdict", to_string(in_probability)},
            {"criterion", "fraction of paths with d(S_n0, S_N) >= eps"},
            {"exceed_fraction", table_json(in_probability_exceed)}}},
          {"agreement", agreement},
          {"path_agreement", path_agreement}};
}

LevyReport levy_equivalence_experiment(const WalkConfig& cfg) {
  cfg.validate();
  auto traces = simulate_walk(cfg);
  LevyReport r;
  r.config = cfg;
  r.pathwise = detect_convergence(*cfg.instance, traces, cfg.eps, cfg.windows, cfg.threshold);
  const std::size_t N = cfg.horizon;
  std::vector<std::vector<double>> terminal(traces.size(), std::vector<double>(cfg.windows.size()));
  for (std::size_t p = 0; p < traces.size(); ++p) {
    for (std::size_t w = 0; w < cfg.windows.size(); ++w) {
      terminal[p][w] = cfg.instance->distance(traces[p].S[cfg.windows[w] - 1], traces[p].S[N - 1]);
    }
  }
  r.in_probability_exceed = exceedance(terminal, cfg.eps, cfg.windows.size());
  r.in_probability = classify(r.in_probability_exceed, cfg.threshold);
  std::size_t agree = 0, cells = 0;
  for (std::size_t e = 0; e < cfg.eps.size(); ++e) {
    for (std::size_t w = 0; w < cfg.windows.size(); ++w) {
      ++cells;
      bool a = r.pathwise.exceed[e][w] < cfg.threshold;
      bool b = r.in_probability_exceed[e][w] < cfg.threshold;
      agree += a == b ? 1 : 0;
    }
  }
  r.agreement = static_cast<double>(agree) / static_cast<double>(cells);
  std::size_t same = 0;
  for (std::size_t p = 0; p < traces.size(); ++p) {
    same += path_class(terminal[p].back(), cfg.eps) == r.pathwise.path_verdicts[p] ? 1 : 0;
  }
  r.path_agreement = static_cast<double>(same) / static_cast<double>(traces.size());
  return r;
}

void write_trace_csv(std::ostream& out, const std::vector<PathTrace>& traces) {
  out << "path,j,distance\n";
  char buf[64];
  for (std::size_t p = 0; p < traces.size(); ++p) {
    for (std::size_t j = 0; j < traces[p].size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", traces[p].D[j]);
      out << p << ',' << (j + 1) << ',' << buf << '\n';
    }
  }
}

}  // namespace msemi
