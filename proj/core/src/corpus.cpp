#include "msemi/corpus.hpp"

#include <algorithm>

#include "msemi/completion.hpp"
#include "msemi/errors.hpp"
#include "msemi/instances.hpp"
#include "msemi/json_io.hpp"

namespace msemi {

nlohmann::json CorpusSpec::to_json() const {
  return {{"count", count},         {"max_length", max_length}, {"max_support", max_support},
          {"instances", instances}, {"seed", seed},             {"cap", cap}};
}

CorpusSpec CorpusSpec::from_json(const nlohmann::json& j) {
  CorpusSpec s;
  for (const auto& [key, value] : j.items()) {
    if (key == "count") {
      s.count = value.get<std::size_t>();
    } else if (key == "max_length") {
      s.max_length = value.get<std::size_t>();
    } else if (key == "max_support") {
      s.max_support = value.get<std::size_t>();
    } else if (key == "instances") {
      s.instances = value.get<std::vector<std::string>>();
    } else if (key == "seed") {
      s.seed = value.get<std::uint64_t>();
    } else if (key == "cap") {
      s.cap = value.get<std::uint64_t>();
    } else {
      throw ConfigError("unknown key '" + key + "' in corpus spec");
    }
  }
  return s;
}

namespace {

Element draw_atom(const MetricSemigroup& inst, Rng& rng) {
  if (const auto* c = dynamic_cast<const MonoidCompletion*>(&inst)) {
    if (uniform_below(rng, 8) == 0) return Element::adjoined_unit();
    return draw_atom(c->base(), rng);
  }
  if (dynamic_cast<const Integers*>(&inst)) return Element::integer(uniform_int(rng, -3, 3));
  if (dynamic_cast<const PositiveRealsAdditive*>(&inst)) {
    return Element::scalar(static_cast<double>(uniform_int(rng, 1, 8)) / 2.0);
  }
  if (!inst.exact_metric()) {
    throw DomainError("corpus generation supports exact-metric instances and posreal; got " + inst.name());
  }
  return inst.sample(rng);
}

DiscreteDistribution draw_variable(const MetricSemigroup& inst, std::size_t max_support, Rng& rng) {
  const auto want = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_support)));
  std::vector<Element> values;
  for (int attempt = 0; attempt < 32 && values.size() < want; ++attempt) {
    Element e = draw_atom(inst, rng);
    if (std::find(values.begin(), values.end(), e) == values.end()) values.push_back(std::move(e));
  }
  std::vector<std::int64_t> weights;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    weights.push_back(uniform_int(rng, 1, 9));
    total += weights.back();
  }
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < values.size(); ++i) atoms.push_back({values[i], Real::ratio(weights[i], total)});
  return DiscreteDistribution(std::move(atoms));
}

}  // namespace

std::vector<IndependentSequence> generate_corpus(const CorpusSpec& spec) {
  if (spec.instances.empty()) throw ConfigError("corpus needs at least one instance");
  if (spec.max_length == 0 || spec.max_support == 0) throw ConfigError("corpus needs positive length and support");
  std::uint64_t worst = 1;
  for (std::size_t i = 0; i < spec.max_length; ++i) {
    if (worst > spec.cap / spec.max_support) {
      throw EnumerationCapExceeded("corpus sizes exceed the enumeration cap of " + std::to_string(spec.cap));
    }
    worst *= spec.max_support;
  }
  if (worst > spec.cap) throw EnumerationCapExceeded("corpus sizes exceed the enumeration cap of " + std::to_string(spec.cap));
  std::vector<InstancePtr> insts;
  for (const auto& name : spec.instances) insts.push_back(parse_instance(name));
  std::vector<IndependentSequence> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const auto& inst = insts[i % insts.size()];
    Rng rng = stream_rng(spec.seed, i);
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(spec.max_length)));
    std::vector<Variable> vars;
    for (std::size_t j = 0; j < n; ++j) vars.emplace_back(draw_variable(*inst, spec.max_support, rng));
    out.emplace_back(inst, std::move(vars));
  }
  return out;
}

nlohmann::json corpus_to_json(const CorpusSpec& spec, const std::vector<IndependentSequence>& corpus) {
  nlohmann::json seqs = nlohmann::json::array();
  for (const auto& s : corpus) seqs.push_back(sequence_to_json(s));
  return {{"spec", spec.to_json()}, {"sequences", seqs}};
}

}  // namespace msemi
