#include "msemi/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "msemi/errors.hpp"

namespace msemi {

namespace {

std::set<double> breakpoints(const std::vector<ScalarLaw>& laws) {
  std::set<double> pts{0.0};
  for (const auto& law : laws) {
    for (const auto& a : law.atoms()) pts.insert(a.value);
  }
  return pts;
}

bool is_small_integer(double p) { return p >= 0 && p <= 64 && std::floor(p) == p; }

Real exact_value(double v) { return Real::exact_from_double(v); }

Element identity_of(const MetricSemigroup& inst) {
  auto id = inst.identity();
  if (!id) throw NoIdentity("truncation needs a monoid; '" + inst.name() + "' has no identity");
  return *id;
}

}  // namespace

double rearrangement_at(const ScalarLaw& law, const Real& t) {
  if (t < Real(0) || t > Real(1)) throw DomainError("rearrangement argument " + t.to_string() + " outside [0, 1]");
  const auto& atoms = law.atoms();
  for (std::size_t i = atoms.size(); i-- > 0;) {
    if (law.tail_inclusive(atoms[i].value) > t) return atoms[i].value;
  }
  return 0.0;
}

ScalarLaw Rearrangement::law_on_grid(unsigned n) const {
  if (n == 0) throw DomainError("grid size must be positive");
  std::vector<LawPoint> points;
  points.reserve(n);
  for (unsigned i = 1; i <= n; ++i) {
    points.push_back({(*this)(Real::ratio(2 * i - 1, 2 * static_cast<std::int64_t>(n))), Real::ratio(1, n)});
  }
  return ScalarLaw::exact(std::move(points));
}

Real summed_tail(const std::vector<ScalarLaw>& laws, double x) {
  Real g;
  for (const auto& law : laws) g += law.tail(x);
  return g;
}

double ell_at(const std::vector<ScalarLaw>& laws, const Real& t) {
  if (laws.empty()) throw DomainError("l needs a non-empty family of laws");
  if (t.sign() <= 0) throw DomainError("l is defined for t > 0");
  for (double c : breakpoints(laws)) {
    if (summed_tail(laws, c) <= t) return c;
  }
  return 0.0;  // unreachable: G vanishes at the largest support point
}

ScalarLaw ell_law(const std::vector<ScalarLaw>& laws) {
  if (laws.empty()) throw DomainError("l needs a non-empty family of laws");
  auto pts = breakpoints(laws);
  std::vector<LawPoint> out;
  Real one(1);
  Real prev = one;  // min(1, G) just below 0
  for (double c : pts) {
    Real cur = min(one, summed_tail(laws, c));
    Real mass = prev - cur;
    if (mass.sign() > 0) out.push_back({c, mass});
    prev = cur;
  }
  return ScalarLaw::exact(std::move(out));
}

EllFunction::EllFunction(std::vector<ScalarLaw> laws) : laws_(std::move(laws)), law_(ell_law(laws_)) {}

Real real_pow(const Real& base, double p) {
  if (base.is_exact() && is_small_integer(p)) return pow(base, static_cast<unsigned>(p));
  return Real(std::pow(base.to_double(), p));
}

Real moment_value(const ScalarLaw& law, double p) {
  if (!(p > 0)) throw DomainError("moment order must be positive");
  if (!law.is_exact() || !is_small_integer(p)) return Real(law.moment(p));
  Real s;
  for (const auto& a : law.atoms()) s += real_pow(exact_value(a.value), p) * a.probability;
  return s;
}

Real psi(const std::vector<ScalarLaw>& laws, const Real& t, double p) {
  if (!(p > 0)) throw DomainError("psi needs p > 0");
  const double lower = ell_at(laws, t);
  bool exact = is_small_integer(p) &&
               std::all_of(laws.begin(), laws.end(), [](const ScalarLaw& l) { return l.is_exact(); });
  std::vector<double> pts;
  for (double c : breakpoints(laws)) {
    if (c >= lower) pts.push_back(c);
  }
  Real total = exact ? Real(0) : Real(0.0);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Real g = summed_tail(laws, pts[i]);
    if (exact) {
      total += g * (real_pow(exact_value(pts[i + 1]), p) - real_pow(exact_value(pts[i]), p));
    } else {
      total += Real(g.to_double() * (std::pow(pts[i + 1], p) - std::pow(pts[i], p)));
    }
  }
  return total;
}

DiscreteDistribution truncate(const DiscreteDistribution& dist, const Real& t, const MetricSemigroup& inst) {
  Element id = identity_of(inst);
  std::vector<Atom> atoms;
  atoms.reserve(dist.size());
  for (const auto& a : dist.atoms()) {
    bool large = Real(inst.distance(id, a.value)) > t;
    atoms.push_back({large ? id : a.value, a.probability});
  }
  return DiscreteDistribution::merged(std::move(atoms));
}

DiscreteDistribution truncate_upper(const DiscreteDistribution& dist, const Real& t, const MetricSemigroup& inst) {
  Element id = identity_of(inst);
  std::vector<Atom> atoms;
  atoms.reserve(dist.size());
  for (const auto& a : dist.atoms()) {
    bool small = Real(inst.distance(id, a.value)) <= t;
    atoms.push_back({small ? id : a.value, a.probability});
  }
  return DiscreteDistribution::merged(std::move(atoms));
}

namespace {

Variable truncate_variable(const Variable& v, const Real& t, const InstancePtr& inst, bool upper) {
  if (const auto* d = std::get_if<DiscreteDistribution>(&v)) {
    return upper ? truncate_upper(*d, t, *inst) : truncate(*d, t, *inst);
  }
  Element id = identity_of(*inst);
  const auto& s = std::get<Sampler>(v);
  double cut = t.to_double();
  Sampler out;
  out.description = s.description + (upper ? " upper-truncated at " : " truncated at ") + t.to_string();
  out.draw = [draw = s.draw, inst, id, cut, upper](Rng& rng) {
    Element x = draw(rng);
    double mag = inst->distance(id, x);
    bool to_identity = upper ? mag <= cut : mag > cut;
    return to_identity ? id : x;
  };
  return out;
}

}  // namespace

Variable truncate(const Variable& v, const Real& t, const InstancePtr& inst) {
  return truncate_variable(v, t, inst, false);
}

Variable truncate_upper(const Variable& v, const Real& t, const InstancePtr& inst) {
  return truncate_variable(v, t, inst, true);
}

TransferResult rearrangement_transfer(const std::vector<TransferTuple>& tuples, const ScalarLaw& law_x,
                                      const ScalarLaw& law_y, const Real& t) {
  if (tuples.empty()) throw DomainError("transfer check needs at least one tuple");
  for (const auto& tp : tuples) {
    if (!(tp.alpha > 0 && tp.beta > 0 && tp.gamma > 0 && tp.delta > 0) || !tp.f) {
      throw DomainError("transfer tuples need positive constants and a function");
    }
  }
  constexpr double kTol = 1e-12;
  TransferResult r;
  std::set<double> cuts;
  for (const auto& tp : tuples) {
    for (const auto& a : law_x.atoms()) {
      if (a.value > 0) cuts.insert(a.value / tp.alpha);
    }
    for (const auto& a : law_y.atoms()) {
      if (a.value > 0) cuts.insert(a.value / tp.gamma);
    }
  }
  // Both tails are right-continuous steps in x, so one point per constancy interval suffices.
  r.grid.push_back(cuts.empty() ? 1.0 : *cuts.begin() / 2);
  r.grid.insert(r.grid.end(), cuts.begin(), cuts.end());
  r.hypothesis_holds = true;
  r.all_tuples_hold = true;
  for (double x : r.grid) {
    bool any = false;
    for (const auto& tp : tuples) {
      double lhs = tp.f(law_x.tail(tp.alpha * x).to_double());
      double rhs = tp.beta * std::pow(law_y.tail(tp.gamma * x).to_double(), tp.delta);
      bool ok = lhs <= rhs + kTol;
      any = any || ok;
      r.all_tuples_hold = r.all_tuples_hold && ok;
    }
    r.hypothesis_holds = r.hypothesis_holds && any;
  }
  r.lhs = rearrangement_at(law_x, t);
  const double tt = t.to_double();
  std::vector<double> bounds;
  for (const auto& tp : tuples) {
    double ratio = tp.f(tt) / tp.beta;
    double y_star;
    if (ratio < 0) {
      y_star = std::numeric_limits<double>::infinity();
    } else {
      double u = std::pow(ratio, 1.0 / tp.delta);
      y_star = u >= 1 ? 0.0 : rearrangement_at(law_y, Real(u));
    }
    bounds.push_back(tp.alpha / tp.gamma * y_star);
  }
  r.rhs = r.all_tuples_hold ? *std::min_element(bounds.begin(), bounds.end())
                            : *std::max_element(bounds.begin(), bounds.end());
  r.conclusion_holds = r.lhs <= r.rhs + kTol;
  return r;
}

}  // namespace msemi
