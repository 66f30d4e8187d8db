#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "msemi/real.hpp"

namespace msemi {

struct LawPoint {
  double value;
  Real probability;
};

struct EmpiricalProvenance {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// A law on [0, inf) with finite support: exact (from enumeration) or
/// empirical (from a sample). Atoms are sorted by value, distinct, and carry
/// positive mass summing to 1.
class ScalarLaw {
 public:
  ScalarLaw() = default;

  /// Merges equal values and sorts. Mass must sum to 1 (exactly for rationals).
  static ScalarLaw exact(std::vector<LawPoint> points);
  static ScalarLaw point_mass(double value);
  static ScalarLaw empirical(std::vector<double> samples, std::uint64_t seed);

  const std::vector<LawPoint>& atoms() const { return atoms_; }
  bool is_empirical() const { return provenance_.has_value(); }
  const std::optional<EmpiricalProvenance>& provenance() const { return provenance_; }
  /// Rational masses throughout.
  bool is_exact() const;
  std::uint64_t trials() const { return provenance_ ? provenance_->trials : 0; }

  /// P(X > x).
  Real tail(double x) const;
  /// P(X >= x).
  Real tail_inclusive(double x) const;
  /// P(X <= x).
  Real cdf(double x) const;
  /// P(X < x).
  Real cdf_strict(double x) const;

  /// E[X^p] as an exact sum over atoms (sample mean for empirical laws).
  double moment(double p) const;
  /// E[X^p]^{1/p}.
  double moment_root(double p) const;
  /// Standard error of the empirical estimate of E[X^p]; 0 for exact laws.
  double moment_standard_error(double p) const;
  /// Standard error of an empirical tail estimate with value `prob`; 0 for exact laws.
  double tail_standard_error(const Real& prob) const;

  double max_value() const { return atoms_.back().value; }
  double min_value() const { return atoms_.front().value; }
  std::vector<double> support() const;

  /// Law of c * X for c > 0.
  ScalarLaw scaled(double c) const;

 private:
  std::vector<LawPoint> atoms_;
  std::vector<Real> suffix_;  // suffix_[i] = P(X >= atoms_[i].value), suffix_[n] = 0
  std::optional<EmpiricalProvenance> provenance_;

  void build_suffix();
  std::size_t first_above(double x) const;
  std::size_t first_at_least(double x) const;
};

}  // namespace msemi
