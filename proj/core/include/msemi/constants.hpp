#pragma once

#include <utility>
#include <vector>

#include "msemi/inequalities.hpp"
#include "msemi/report.hpp"

namespace msemi {

/// (t, s) pairs with t <= s <= 1/2 and t in {1/100, 1/20, 1/10}.
std::vector<std::pair<Real, Real>> default_c1_grid();

/// Supremum of the required c_1 over corpus x grid (degenerate points excluded).
ConstantEstimate estimate_c1(const std::vector<IndependentSequence>& corpus,
                             const std::vector<std::pair<Real, Real>>& grid, std::uint64_t seed = 0);

struct PQ {
  double p;
  double q;
};

std::vector<PQ> default_pq_grid();

struct CEstimate {
  ConstantEstimate c;
  double c_prime = 0;
  std::size_t second_checked = 0;
  std::size_t second_violations = 0;
  std::optional<InequalityReport> worst_second;  // smallest slack among second-form checks

  nlohmann::json to_json() const;
};

/// Supremum of the required c for the first moment-comparison inequality over
/// the abelian members of the corpus, then the second inequality checked on
/// the same members with c' derived from that supremum.
CEstimate estimate_c(const std::vector<IndependentSequence>& corpus, double p0, double eps,
                     const std::vector<PQ>& grid, std::uint64_t seed = 0);

/// Approximation constants for both ratio forms: sup ratio and sup 1/ratio
/// over the abelian members of the corpus, at each p.
std::vector<ConstantEstimate> estimate_tbounds(const std::vector<IndependentSequence>& corpus,
                                               const std::vector<double>& ps, std::uint64_t seed = 0);

}  // namespace msemi
