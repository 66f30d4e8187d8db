#include "msemi/report.hpp"

#include <cmath>
#include <limits>

#include "msemi/errors.hpp"

namespace msemi {

std::string to_string(Certification c) {
  switch (c) {
    case Certification::rational:
      return "rational";
    case Certification::floating:
      return "float";
    case Certification::monte_carlo:
      return "monte-carlo";
  }
  return "unknown";
}

EngineInfo EngineInfo::from(const EngineSpec& spec) {
  EngineInfo e;
  e.kind = spec.kind;
  if (spec.kind == EngineKind::monte_carlo) {
    e.trials = spec.trials;
    e.seed = spec.seed;
  }
  return e;
}

nlohmann::json EngineInfo::to_json() const {
  nlohmann::json j{{"kind", to_string(kind)}};
  if (kind == EngineKind::monte_carlo) {
    j["trials"] = trials;
    j["seed"] = seed;
  }
  return j;
}

nlohmann::json json_number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

nlohmann::json json_real(const Real& v) {
  if (v.is_exact()) return v.to_string();
  return json_number(v.to_double());
}

nlohmann::json InequalityReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["params"] = params;
  j["lhs"] = json_number(lhs.to_double());
  j["rhs"] = json_number(rhs.to_double());
  j["slack"] = json_number(slack.to_double());
  if (certification == Certification::rational) {
    j["exact"] = {{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}, {"slack", slack.to_string()}};
  }
  j["holds"] = holds;
  j["certification"] = to_string(certification);
  j["tolerance"] = tolerance;
  j["engine"] = engine.to_json();
  if (se) j["engine"]["se"] = json_number(*se);
  if (z) j["z"] = json_number(*z);
  if (degenerate) j["degenerate"] = *degenerate;
  if (!details.empty()) j["details"] = details;
  return j;
}

InequalityReport make_report(std::string name, nlohmann::json params, Evaluation eval, const EngineInfo& engine,
                             bool rational_inputs, double tol) {
  InequalityReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.engine = engine;
  r.lhs = std::move(eval.lhs);
  r.rhs = std::move(eval.rhs);
  r.slack = r.rhs - r.lhs;
  r.degenerate = std::move(eval.degenerate);
  r.details = std::move(eval.details);
  if (engine.kind == EngineKind::monte_carlo) {
    r.certification = Certification::monte_carlo;
    r.se = 0.0;
    double s = r.slack.to_double();
    r.z = s >= 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    r.holds = s >= 0;
  } else if (rational_inputs && r.lhs.is_exact() && r.rhs.is_exact()) {
    r.certification = Certification::rational;
    r.tolerance = 0;
    r.holds = r.slack.sign() >= 0;
  } else {
    r.certification = Certification::floating;
    r.tolerance = tol;
    double s = r.slack.to_double();
    r.holds = std::isnan(s) ? false : s >= -tol;
  }
  if (r.degenerate) r.holds = true;
  return r;
}

InequalityReport evaluate(std::string name, nlohmann::json params, const Inputs& inputs, const Formula& formula,
                          const EngineInfo& engine, bool rational_inputs, double tol) {
  if (inputs.values.size() != inputs.se.size()) throw DomainError("inputs and standard errors differ in length");
  InequalityReport r = make_report(std::move(name), std::move(params), formula(inputs.values), engine,
                                   rational_inputs, tol);
  if (engine.kind != EngineKind::monte_carlo || r.degenerate) return r;
  double var = 0;
  for (std::size_t i = 0; i < inputs.values.size(); ++i) {
    if (!(inputs.se[i] > 0)) continue;
    double x = inputs.values[i].to_double();
    double h = 1e-6 * std::max(1.0, std::abs(x));
    auto slack_at = [&](double v) {
      auto shifted = inputs.values;
      shifted[i] = Real(v);
      Evaluation e = formula(shifted);
      return (e.rhs - e.lhs).to_double();
    };
    double g = (slack_at(x + h) - slack_at(x - h)) / (2 * h);
    if (std::isfinite(g)) var += g * g * inputs.se[i] * inputs.se[i];
  }
  double se = std::sqrt(var);
  double s = r.slack.to_double();
  r.se = se;
  if (se > 0) {
    r.z = s / se;
  } else {
    r.z = s >= 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
  }
  r.holds = s >= 0 || *r.z >= kMonteCarloZ;
  return r;
}

nlohmann::json RatioReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["params"] = params;
  j["numerator"] = json_number(numerator);
  j["denominator"] = json_number(denominator);
  j["ratio"] = json_number(ratio);
  if (degenerate) j["degenerate"] = *degenerate;
  if (!details.empty()) j["details"] = details;
  return j;
}

RatioReport make_ratio(std::string name, nlohmann::json params, double numerator, double denominator,
                       double zero_over_zero, bool flag_zero_over_zero) {
  RatioReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.numerator = numerator;
  r.denominator = denominator;
  if (denominator == 0) {
    if (numerator == 0) {
      r.ratio = zero_over_zero;
      if (flag_zero_over_zero) r.degenerate = "numerator and denominator are both zero";
    } else {
      r.ratio = std::numeric_limits<double>::infinity();
      r.degenerate = "zero denominator";
    }
  } else {
    r.ratio = numerator / denominator;
  }
  return r;
}

void ConstantEstimate::absorb(const RatioReport& r, std::size_t index, const std::string& instance,
                              const nlohmann::json& sequence) {
  if (r.degenerate) {
    ++degenerate_excluded;
    return;
  }
  ++evaluated;
  if (!witness || r.ratio > value) {
    value = r.ratio;
    witness = Witness{index, instance, sequence, r.params};
  }
}

nlohmann::json ConstantEstimate::to_json() const {
  nlohmann::json j;
  j["constant"] = constant;
  j["value"] = json_number(value);
  j["corpus_size"] = corpus_size;
  j["seed"] = seed;
  j["evaluated"] = evaluated;
  j["degenerate_excluded"] = degenerate_excluded;
  j["params"] = params;
  if (witness) {
    j["witness"] = {{"index", witness->index},
                    {"instance", witness->instance},
                    {"params", witness->params},
                    {"sequence", witness->sequence}};
  } else {
    j["witness"] = nullptr;
  }
  if (!details.empty()) j["details"] = details;
  return j;
}

}  // namespace msemi
