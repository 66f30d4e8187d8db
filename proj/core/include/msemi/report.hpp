#pragma once

#include <cstdint>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "msemi/engine.hpp"
#include "msemi/real.hpp"

namespace msemi {

inline constexpr double kFloatTolerance = 1e-12;
inline constexpr double kMonteCarloZ = -3.0;

/// How a report's verdict was reached.
enum class Certification {
  rational,     // exact rational arithmetic, slack >= 0 required
  floating,     // exact engine with floating inputs, slack >= -tol
  monte_carlo,  // z = slack / se, flagged only below -3
};

std::string to_string(Certification c);

struct EngineInfo {
  EngineKind kind = EngineKind::exact;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  static EngineInfo from(const EngineSpec& spec);
  nlohmann::json to_json() const;
};

struct InequalityReport {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  Real lhs;
  Real rhs;
  Real slack;
  bool holds = true;
  Certification certification = Certification::rational;
  double tolerance = 0;
  EngineInfo engine;
  std::optional<double> se;
  std::optional<double> z;
  std::optional<std::string> degenerate;
  nlohmann::json details = nlohmann::json::object();

  /// Degenerate reports count as passing.
  bool passes() const { return degenerate.has_value() || holds; }
  nlohmann::json to_json() const;
};

/// A checker's value for given inputs: both sides plus optional notes.
struct Evaluation {
  Real lhs;
  Real rhs;
  std::optional<std::string> degenerate;
  nlohmann::json details = nlohmann::json::object();
};

/// Statistical inputs to a checker: estimated values with standard errors
/// (zero for exact inputs and for quantiles).
struct Inputs {
  std::vector<Real> values;
  std::vector<double> se;

  void add(Real v, double s = 0) {
    values.push_back(std::move(v));
    se.push_back(s);
  }
};

using Formula = std::function<Evaluation(const std::vector<Real>&)>;

/// Evaluates `formula` at `inputs` and applies the tolerance ladder. In Monte
/// Carlo mode the standard error of the slack comes from the delta method
/// with a central-difference gradient, treating inputs as uncorrelated.
InequalityReport evaluate(std::string name, nlohmann::json params, const Inputs& inputs, const Formula& formula,
                          const EngineInfo& engine, bool rational_inputs, double tol = kFloatTolerance);

/// Builds a report from already computed sides (no MC error propagation).
InequalityReport make_report(std::string name, nlohmann::json params, Evaluation eval, const EngineInfo& engine,
                             bool rational_inputs, double tol = kFloatTolerance);

/// A required-constant style ratio (numerator over denominator).
struct RatioReport {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  double numerator = 0;
  double denominator = 0;
  double ratio = 0;
  std::optional<std::string> degenerate;
  nlohmann::json details = nlohmann::json::object();

  nlohmann::json to_json() const;
};

/// Ratio with conventions: 0/0 -> `zero_over_zero` (flagged degenerate when requested).
RatioReport make_ratio(std::string name, nlohmann::json params, double numerator, double denominator,
                       double zero_over_zero = 0.0, bool flag_zero_over_zero = false);

struct Witness {
  std::size_t index = 0;
  std::string instance;
  nlohmann::json sequence;
  nlohmann::json params;
};

struct ConstantEstimate {
  std::string constant;
  double value = 0;  // supremum of required values; 0 when nothing was evaluated
  std::optional<Witness> witness;
  std::size_t corpus_size = 0;
  std::uint64_t seed = 0;
  std::size_t evaluated = 0;
  std::size_t degenerate_excluded = 0;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json details = nlohmann::json::object();

  /// Max-reduce another ratio into the estimate; ties keep the earlier witness.
  void absorb(const RatioReport& r, std::size_t index, const std::string& instance, const nlohmann::json& sequence);
  nlohmann::json to_json() const;
};

/// JSON number for finite doubles, "inf"/"-inf"/"nan" strings otherwise.
nlohmann::json json_number(double v);
nlohmann::json json_real(const Real& v);

}  // namespace msemi
