#include "msemi/engine.hpp"

#include <algorithm>
#include <map>

#include "msemi/errors.hpp"
#include "msemi/parallel.hpp"

namespace msemi {

std::string to_string(EngineKind kind) { return kind == EngineKind::exact ? "exact" : "monte-carlo"; }

EngineKind parse_engine_kind(const std::string& text) {
  if (text == "exact") return EngineKind::exact;
  if (text == "mc" || text == "monte-carlo") return EngineKind::monte_carlo;
  throw ConfigError("unknown engine '" + text + "' (expected exact or mc)");
}

namespace {

struct Walker {
  const IndependentSequence& seq;
  const MetricSemigroup& g;
  std::vector<const DiscreteDistribution*> dists;
  const std::function<void(const PathTrace&, const Real&)>& visit;
  PathTrace trace;
  std::vector<Real> mass;

  void push(const Element& x, std::size_t j) {
    trace.S.push_back(j == 0 ? x : g.compose(trace.S.back(), x));
    double d = g.distance(seq.z1(), g.compose(seq.z0(), trace.S.back()));
    double y = g.magnitude(seq.z0(), x);
    trace.D.push_back(d);
    trace.U.push_back(j == 0 ? d : std::max(trace.U.back(), d));
    trace.Y.push_back(y);
    trace.M.push_back(j == 0 ? y : std::max(trace.M.back(), y));
  }

  void pop() {
    trace.S.pop_back();
    trace.D.pop_back();
    trace.U.pop_back();
    trace.Y.pop_back();
    trace.M.pop_back();
  }

  void descend(std::size_t j) {
    if (j == dists.size()) {
      visit(trace, mass.back());
      return;
    }
    for (const auto& atom : dists[j]->atoms()) {
      push(atom.value, j);
      mass.push_back(mass.back() * atom.probability);
      descend(j + 1);
      mass.pop_back();
      pop();
    }
  }
};

void check_enumerable(const IndependentSequence& seq, std::uint64_t cap) {
  if (!seq.all_discrete()) throw DomainError("exact enumeration needs finitely supported variables");
  std::uint64_t outcomes = seq.joint_outcomes();
  if (outcomes > cap) {
    throw EnumerationCapExceeded(std::to_string(outcomes) + " joint outcomes exceed the cap of " +
                                 std::to_string(cap));
  }
}

}  // namespace

void enumerate_paths(const IndependentSequence& seq,
                     const std::function<void(const PathTrace&, const Real&)>& visit, std::uint64_t cap) {
  check_enumerable(seq, cap);
  Walker w{seq, seq.instance(), {}, visit, {}, {Real(1)}};
  for (std::size_t j = 0; j < seq.size(); ++j) w.dists.push_back(&seq.distribution(j));
  w.descend(0);
}

std::vector<ScalarLaw> exact_functional_laws(const IndependentSequence& seq,
                                             const std::vector<PathFunctional>& functionals, std::uint64_t cap) {
  check_enumerable(seq, cap);
  const auto& first = seq.distribution(0);
  // One slot per atom of X_1; slots are merged in index order afterwards.
  std::vector<std::vector<std::map<double, Real>>> slots(first.size(),
                                                         std::vector<std::map<double, Real>>(functionals.size()));
  parallel_for(first.size(), [&](std::size_t a) {
    auto& acc = slots[a];
    auto visit = [&](const PathTrace& t, const Real& p) {
      for (std::size_t f = 0; f < functionals.size(); ++f) {
        auto [it, inserted] = acc[f].try_emplace(functionals[f](t), p);
        if (!inserted) it->second += p;
      }
    };
    Walker w{seq, seq.instance(), {}, visit, {}, {first.atoms()[a].probability}};
    for (std::size_t j = 0; j < seq.size(); ++j) w.dists.push_back(&seq.distribution(j));
    w.push(first.atoms()[a].value, 0);
    w.descend(1);
  });
  std::vector<ScalarLaw> out;
  out.reserve(functionals.size());
  for (std::size_t f = 0; f < functionals.size(); ++f) {
    std::vector<LawPoint> points;
    for (auto& slot : slots) {
      for (auto& [v, p] : slot[f]) points.push_back({v, std::move(p)});
    }
    out.push_back(ScalarLaw::exact(std::move(points)));
  }
  return out;
}

ScalarLaw exact_functional_law(const IndependentSequence& seq, const PathFunctional& functional, std::uint64_t cap) {
  return exact_functional_laws(seq, {functional}, cap).front();
}

std::vector<Element> sample_outcome(const IndependentSequence& seq, std::uint64_t seed, std::uint64_t trial) {
  Rng rng = stream_rng(seed, trial);
  std::vector<Element> out;
  out.reserve(seq.size());
  for (const auto& v : seq.variables()) {
    if (const auto* d = std::get_if<DiscreteDistribution>(&v)) {
      out.push_back(d->sample(rng));
    } else {
      out.push_back(std::get<Sampler>(v).draw(rng));
    }
  }
  return out;
}

std::vector<ScalarLaw> monte_carlo_laws(const IndependentSequence& seq,
                                        const std::vector<PathFunctional>& functionals, std::uint64_t trials,
                                        std::uint64_t seed) {
  if (trials == 0) throw DomainError("monte carlo needs at least one trial");
  std::vector<std::vector<double>> values(functionals.size(), std::vector<double>(trials));
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
  parallel_for(chunks, [&](std::size_t c) {
    const std::uint64_t lo = c * kChunk;
    const std::uint64_t hi = std::min(trials, lo + kChunk);
    for (std::uint64_t i = lo; i < hi; ++i) {
      auto outcome = sample_outcome(seq, seed, i);
      PathTrace t = partial_products(seq, outcome);
      for (std::size_t f = 0; f < functionals.size(); ++f) values[f][i] = functionals[f](t);
    }
  });
  std::vector<ScalarLaw> out;
  out.reserve(functionals.size());
  for (auto& v : values) out.push_back(ScalarLaw::empirical(std::move(v), seed));
  return out;
}

ScalarLaw monte_carlo_law(const IndependentSequence& seq, const PathFunctional& functional, std::uint64_t trials,
                          std::uint64_t seed) {
  return monte_carlo_laws(seq, {functional}, trials, seed).front();
}

std::vector<ScalarLaw> functional_laws(const IndependentSequence& seq,
                                       const std::vector<PathFunctional>& functionals, const EngineSpec& engine) {
  if (engine.kind == EngineKind::exact) return exact_functional_laws(seq, functionals, engine.cap);
  return monte_carlo_laws(seq, functionals, engine.trials, engine.seed);
}

PathFunctional functional::y(std::size_t j) {
  return [j](const PathTrace& t) { return t.Y.at(j); };
}

ScalarLaw law_of_Un(const IndependentSequence& seq, const EngineSpec& engine) {
  return functional_laws(seq, {functional::u_n}, engine).front();
}

ScalarLaw law_of_Mn(const IndependentSequence& seq, const EngineSpec& engine) {
  return functional_laws(seq, {functional::m_n}, engine).front();
}

ScalarLaw magnitude_law(const MetricSemigroup& inst, const Element& z0, const DiscreteDistribution& dist) {
  std::vector<LawPoint> points;
  points.reserve(dist.size());
  for (const auto& a : dist.atoms()) points.push_back({inst.magnitude(z0, a.value), a.probability});
  return ScalarLaw::exact(std::move(points));
}

}  // namespace msemi
