#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msemi/inequalities.hpp"
#include "msemi/rng.hpp"

namespace msemi {

/// Checker names accepted by run_default_grid, in suite order.
const std::vector<std::string>& checker_names();

/// Resolves aliases (ell, moment, quantile, ehm, hjmoment, trunc); ConfigError on unknown names.
std::string canonical_checker(const std::string& name);

struct SuiteResult {
  std::vector<InequalityReport> reports;
  std::vector<RatioReport> ratios;

  void append(SuiteResult other);
  std::size_t violations() const;
};

/// Distinct positive values X*((i - 1/2)/levels), i = 1..levels, as exact numbers.
std::vector<Real> quantile_grid(const ScalarLaw& law, unsigned levels = 16);

/// {0}, every atom, midpoints between consecutive atoms and max + 1.
std::vector<Real> threshold_candidates(const ScalarLaw& law);

std::vector<Real> default_t_grid();       // {1/20, 1/10, 1/4, 2/5, 49/100}
std::vector<double> default_p_grid();     // {0.5, 1, 2}
std::vector<double> default_r_grid();     // {0.3, 0.9}
std::vector<Real> default_eta_grid();     // {1/8, 1/4, 1/2, 3/4, 1}

/// Deterministic HJ points: k = 1 over n_1 in {1, 2} and k = 2 with n = (1, 1).
std::vector<HJParameters> default_hj_grid(const LawContext& ctx);

/// Random valid parameters: k <= min(3, n + 1), sum n_i <= n + 1, thresholds
/// drawn from threshold_candidates of U (t_i) and M (s).
HJParameters random_hj_parameters(const LawContext& ctx, Rng& rng);

struct MogulskiiPoint {
  std::size_t m;
  Real a;
  Real b;
};

std::vector<MogulskiiPoint> default_mogulskii_grid(const LawContext& ctx);
/// One random point; a and b come from threshold_candidates of U, so a < b and b = 0 both occur.
MogulskiiPoint random_mogulskii_point(const LawContext& ctx, Rng& rng);

/// Runs one checker over its default grid. Tupq takes c from this sequence's
/// required constant and checks the second form with the matching c'.
SuiteResult run_default_grid(const LawContext& ctx, const std::string& checker, double tol = kFloatTolerance);

}  // namespace msemi
