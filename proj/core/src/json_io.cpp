#include "msemi/json_io.hpp"

#include <fstream>
#include <set>

#include "msemi/errors.hpp"
#include "msemi/instances.hpp"
#include "msemi/report.hpp"

namespace msemi {

namespace {

void reject_unknown(const nlohmann::json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

Variable variable_from_json(const nlohmann::json& v, const InstancePtr& inst, std::size_t index) {
  const std::string where = "variables[" + std::to_string(index) + "]";
  reject_unknown(v, {"atoms", "sampler"}, where);
  if (v.contains("atoms") == v.contains("sampler")) {
    throw ConfigError(where + " needs exactly one of 'atoms' or 'sampler'");
  }
  if (v.contains("sampler")) {
    if (v.at("sampler") != "instance") throw ConfigError(where + ": only sampler \"instance\" is supported");
    if (!inst->has_sampler()) throw ConfigError(where + ": instance " + inst->name() + " has no sampler");
    return Sampler{[inst](Rng& rng) { return inst->sample(rng); }, "instance"};
  }
  const auto& atoms = v.at("atoms");
  if (!atoms.is_array() || atoms.empty()) throw ConfigError(where + ".atoms must be a non-empty array");
  std::vector<Atom> out;
  for (const auto& a : atoms) {
    if (!a.is_array() || a.size() != 2) throw ConfigError(where + ": each atom is [element, probability]");
    out.push_back({inst->parse_element(a[0]), probability_from_json(a[1])});
  }
  return DiscreteDistribution(std::move(out));
}

}  // namespace

Real probability_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Real::parse(j.get<std::string>());
  if (j.is_number_integer()) return Real(j.get<int>());
  if (j.is_number()) return Real(j.get<double>());
  throw ConfigError("probability must be a string or a number");
}

nlohmann::json probability_to_json(const Real& p) {
  if (p.is_exact()) return p.to_string();
  return p.to_double();
}

SequenceConfig sequence_config_from_json(const nlohmann::json& j) {
  reject_unknown(j, {"instance", "variables", "z0", "z1", "engine", "trials", "seed"}, "sequence config");
  if (!j.contains("instance") || !j.at("instance").is_string()) throw ConfigError("config needs an 'instance' string");
  if (!j.contains("variables") || !j.at("variables").is_array()) throw ConfigError("config needs a 'variables' array");
  try {
    InstancePtr inst = parse_instance(j.at("instance").get<std::string>());
    std::vector<Variable> vars;
    for (std::size_t i = 0; i < j.at("variables").size(); ++i) {
      vars.push_back(variable_from_json(j.at("variables")[i], inst, i));
    }
    std::optional<Element> z0, z1;
    if (j.contains("z0")) z0 = inst->parse_element(j.at("z0"));
    if (j.contains("z1")) z1 = inst->parse_element(j.at("z1"));
    SequenceConfig cfg{IndependentSequence(inst, std::move(vars), z0, z1), std::nullopt, std::nullopt, std::nullopt};
    if (j.contains("engine")) cfg.engine = parse_engine_kind(j.at("engine").get<std::string>());
    if (j.contains("trials")) cfg.trials = j.at("trials").get<std::uint64_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    return cfg;
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("invalid sequence config: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid sequence config: ") + e.what());
  }
}

IndependentSequence sequence_from_json(const nlohmann::json& j) { return sequence_config_from_json(j).sequence; }

nlohmann::json sequence_to_json(const IndependentSequence& seq) {
  const auto& inst = seq.instance();
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& v : seq.variables()) {
    const auto* d = std::get_if<DiscreteDistribution>(&v);
    if (!d) {
      vars.push_back({{"sampler", "instance"}});
      continue;
    }
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : d->atoms()) atoms.push_back({inst.format_element(a.value), probability_to_json(a.probability)});
    vars.push_back({{"atoms", atoms}});
  }
  return {{"instance", inst.name()},
          {"variables", vars},
          {"z0", inst.format_element(seq.z0())},
          {"z1", inst.format_element(seq.z1())}};
}

nlohmann::json law_to_json(const ScalarLaw& law) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& a : law.atoms()) out.push_back({a.value, probability_to_json(a.probability)});
  return out;
}

nlohmann::json axiom_report_to_json(const AxiomReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json cj{{"axiom", c.axiom}, {"checked", c.checked}, {"violations", c.violations}};
    if (c.violations > 0) {
      cj["worst_excess"] = json_number(c.worst_excess);
      cj["worst_witness"] = c.worst_witness;
    }
    checks.push_back(cj);
  }
  return {{"instance", report.instance},
          {"mode", report.mode},
          {"tolerance", report.tolerance},
          {"total_violations", report.total_violations()},
          {"ok", report.ok()},
          {"checks", checks}};
}

nlohmann::json property_set_to_json(const PropertySet& props) {
  nlohmann::json holding = nlohmann::json::array();
  if (props.left_invariant) holding.push_back(1);
  if (props.right_invariant) holding.push_back(2);
  if (props.inverse_isometry) holding.push_back(3);
  if (props.conjugation_invariant) holding.push_back(4);
  return {{"instance", props.instance},
          {"holding", holding},
          {"violations",
           {{"left_invariance", props.violations[0]},
            {"right_invariance", props.violations[1]},
            {"inverse_isometry", props.violations[2]},
            {"conjugation_invariance", props.violations[3]}}},
          {"implication_consistent", props.implication_consistent()}};
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("cannot parse '" + path + "': " + e.what());
  }
}

}  // namespace msemi
