#include "msemi/scalar_law.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "msemi/errors.hpp"

namespace msemi {

ScalarLaw ScalarLaw::exact(std::vector<LawPoint> points) {
  if (points.empty()) throw DomainError("scalar law needs at least one atom");
  std::map<double, Real> merged;
  Real total;
  for (auto& p : points) {
    if (!(p.value >= 0.0) || !std::isfinite(p.value)) throw DomainError("scalar law value must be finite and >= 0");
    if (p.probability.sign() < 0) throw DomainError("negative probability in scalar law");
    total += p.probability;
    auto [it, inserted] = merged.try_emplace(p.value, p.probability);
    if (!inserted) it->second += p.probability;
  }
  if (total.is_exact() ? total != Real(1) : std::abs(total.to_double() - 1.0) > 1e-9) {
    throw DomainError("scalar law mass sums to " + total.to_string());
  }
  ScalarLaw law;
  for (auto& [v, p] : merged) {
    if (p.sign() > 0) law.atoms_.push_back({v, std::move(p)});
  }
  law.build_suffix();
  return law;
}

ScalarLaw ScalarLaw::point_mass(double value) { return exact({{value, Real(1)}}); }

ScalarLaw ScalarLaw::empirical(std::vector<double> samples, std::uint64_t seed) {
  if (samples.empty()) throw DomainError("empirical law needs at least one sample");
  std::sort(samples.begin(), samples.end());
  ScalarLaw law;
  const double n = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < samples.size();) {
    std::size_t j = i;
    while (j < samples.size() && samples[j] == samples[i]) ++j;
    if (!(samples[i] >= 0.0)) throw DomainError("empirical law value must be >= 0");
    law.atoms_.push_back({samples[i], Real(static_cast<double>(j - i) / n)});
    i = j;
  }
  law.provenance_ = EmpiricalProvenance{samples.size(), seed};
  law.build_suffix();
  return law;
}

void ScalarLaw::build_suffix() {
  suffix_.assign(atoms_.size() + 1, Real(is_exact() ? Real(0) : Real(0.0)));
  if (is_empirical()) {
    // Counts are accumulated in double from the top; exact integer arithmetic would be
    // identical for sample sizes below 2^53.
    double run = 0.0;
    for (std::size_t i = atoms_.size(); i-- > 0;) {
      run += atoms_[i].probability.to_double();
      suffix_[i] = Real(std::min(run, 1.0));
    }
    return;
  }
  for (std::size_t i = atoms_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + atoms_[i].probability;
}

bool ScalarLaw::is_exact() const {
  return !is_empirical() &&
         std::all_of(atoms_.begin(), atoms_.end(), [](const LawPoint& p) { return p.probability.is_exact(); });
}

std::size_t ScalarLaw::first_above(double x) const {
  auto it = std::upper_bound(atoms_.begin(), atoms_.end(), x,
                             [](double v, const LawPoint& p) { return v < p.value; });
  return static_cast<std::size_t>(it - atoms_.begin());
}

std::size_t ScalarLaw::first_at_least(double x) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                             [](const LawPoint& p, double v) { return p.value < v; });
  return static_cast<std::size_t>(it - atoms_.begin());
}

Real ScalarLaw::tail(double x) const { return suffix_[first_above(x)]; }
Real ScalarLaw::tail_inclusive(double x) const { return suffix_[first_at_least(x)]; }
Real ScalarLaw::cdf(double x) const { return Real(1) - tail(x); }
Real ScalarLaw::cdf_strict(double x) const { return Real(1) - tail_inclusive(x); }

double ScalarLaw::moment(double p) const {
  if (!(p > 0.0)) throw DomainError("moment order must be positive");
  double s = 0.0;
  for (const auto& a : atoms_) s += std::pow(a.value, p) * a.probability.to_double();
  return s;
}

double ScalarLaw::moment_root(double p) const { return std::pow(moment(p), 1.0 / p); }

double ScalarLaw::moment_standard_error(double p) const {
  if (!is_empirical()) return 0.0;
  double m1 = moment(p);
  double m2 = moment(2.0 * p);
  double var = std::max(0.0, m2 - m1 * m1);
  return std::sqrt(var / static_cast<double>(trials()));
}

double ScalarLaw::tail_standard_error(const Real& prob) const {
  if (!is_empirical()) return 0.0;
  double q = prob.to_double();
  return std::sqrt(std::max(0.0, q * (1.0 - q)) / static_cast<double>(trials()));
}

std::vector<double> ScalarLaw::support() const {
  std::vector<double> out;
  out.reserve(atoms_.size());
  for (const auto& a : atoms_) out.push_back(a.value);
  return out;
}

ScalarLaw ScalarLaw::scaled(double c) const {
  if (!(c > 0.0)) throw DomainError("scale factor must be positive");
  ScalarLaw out = *this;
  for (auto& a : out.atoms_) a.value *= c;
  return out;
}

}  // namespace msemi
