#pragma once

#include <functional>
#include <vector>

#include "msemi/distribution.hpp"
#include "msemi/scalar_law.hpp"
#include "msemi/semigroup.hpp"

namespace msemi {

/// X*(t) = sup{y >= 0 : P(X > y) > t}, with sup of the empty set taken as 0.
/// For a step law this is the largest atom v with P(X >= v) > t.
double rearrangement_at(const ScalarLaw& law, const Real& t);

/// The decreasing rearrangement of one law, as a callable.
class Rearrangement {
 public:
  explicit Rearrangement(ScalarLaw law) : law_(std::move(law)) {}
  double operator()(const Real& t) const { return rearrangement_at(law_, t); }
  const ScalarLaw& law() const { return law_; }

  /// Law of X*(u) for u uniform on an n-point grid {(i - 1/2)/n}.
  ScalarLaw law_on_grid(unsigned n) const;

 private:
  ScalarLaw law_;
};

/// Sum of tails G(x) = sum_n P(Y_n > x) over a finite family.
Real summed_tail(const std::vector<ScalarLaw>& laws, double x);

/// l(t) = inf{y > 0 : G(y) <= t}, or 0 when every y > 0 qualifies.
double ell_at(const std::vector<ScalarLaw>& laws, const Real& t);

/// Law of l(U) for U uniform on (0, 1]: P(l > x) = min(1, G(x)).
ScalarLaw ell_law(const std::vector<ScalarLaw>& laws);

class EllFunction {
 public:
  explicit EllFunction(std::vector<ScalarLaw> laws);
  double operator()(const Real& t) const { return ell_at(laws_, t); }
  Real tail_sum(double x) const { return summed_tail(laws_, x); }
  const ScalarLaw& law() const { return law_; }
  const std::vector<ScalarLaw>& family() const { return laws_; }

 private:
  std::vector<ScalarLaw> laws_;
  ScalarLaw law_;
};

/// p sum_n int_{l(t)}^inf u^{p-1} P(Y_n > u) du, evaluated per constancy
/// interval [a, b) as G(a) (b^p - a^p). Exact when p is a positive integer and
/// the laws carry rational masses.
Real psi(const std::vector<ScalarLaw>& laws, const Real& t, double p);

/// E[X^p] as a Real: exact for integer p on exact laws, double otherwise.
Real moment_value(const ScalarLaw& law, double p);
/// Real power: exact for exact base and integer p, double otherwise.
Real real_pow(const Real& base, double p);

/// X(t): atoms with d(1, x) > t replaced by the identity, masses merged.
DiscreteDistribution truncate(const DiscreteDistribution& dist, const Real& t, const MetricSemigroup& inst);
/// X'(t): atoms with d(1, x) <= t replaced by the identity.
DiscreteDistribution truncate_upper(const DiscreteDistribution& dist, const Real& t, const MetricSemigroup& inst);
/// Both truncations, lifted to sampler-backed variables by post-composing the draw.
Variable truncate(const Variable& v, const Real& t, const InstancePtr& inst);
Variable truncate_upper(const Variable& v, const Real& t, const InstancePtr& inst);

/// One hypothesis tuple f(P(X > a x)) <= b P(Y > c x)^d, with f nondecreasing.
struct TransferTuple {
  double alpha;
  double beta;
  double gamma;
  double delta;
  std::function<double(double)> f;
};

struct TransferResult {
  /// Hypothesis held for every x on the grid (for at least one tuple per x).
  bool hypothesis_holds = false;
  /// Hypothesis held for every tuple at every grid point (min form applies).
  bool all_tuples_hold = false;
  double lhs = 0;  // X*(t)
  double rhs = 0;  // max (or min) over tuples of (a/c) Y*((f(t)/b)^{1/d})
  bool conclusion_holds = false;
  std::vector<double> grid;
};

/// Checks the transfer bound: verifies the hypothesis on every constancy
/// interval of both step tails, then compares X*(t) with the bound.
TransferResult rearrangement_transfer(const std::vector<TransferTuple>& tuples, const ScalarLaw& law_x,
                                      const ScalarLaw& law_y, const Real& t);

}  // namespace msemi
