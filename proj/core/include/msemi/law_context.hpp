#pragma once

#include <vector>

#include "msemi/engine.hpp"
#include "msemi/report.hpp"
#include "msemi/sequence.hpp"

namespace msemi {

/// Laws of U_n, M_n and of every step magnitude Y_j for one sequence, computed
/// once with the chosen engine and shared by the checkers.
class LawContext {
 public:
  LawContext(IndependentSequence seq, EngineSpec engine = EngineSpec::exact());

  const IndependentSequence& sequence() const { return seq_; }
  const EngineSpec& engine() const { return engine_; }
  EngineInfo engine_info() const { return EngineInfo::from(engine_); }

  const ScalarLaw& U() const { return laws_[0]; }
  const ScalarLaw& M() const { return laws_[1]; }
  /// Magnitude laws of Y_1..Y_n.
  const std::vector<ScalarLaw>& Y() const { return magnitudes_; }

  /// Extra functionals under the same engine (and the same Monte Carlo paths).
  std::vector<ScalarLaw> laws_of(const std::vector<PathFunctional>& functionals) const;

  /// Exact engine on exact inputs with an exact metric: verdicts are rational.
  bool rational() const;

  /// Standard error of an estimated tail probability (0 in exact mode).
  double tail_se(const ScalarLaw& law, const Real& p) const { return law.tail_standard_error(p); }

 private:
  IndependentSequence seq_;
  EngineSpec engine_;
  std::vector<ScalarLaw> laws_;
  std::vector<ScalarLaw> magnitudes_;
};

}  // namespace msemi
