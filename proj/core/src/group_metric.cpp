#include <cmath>

#include "msemi/axioms.hpp"
#include "msemi/errors.hpp"

namespace msemi {

int PropertySet::count() const {
  return int{left_invariant} + int{right_invariant} + int{inverse_isometry} + int{conjugation_invariant};
}

PropertySet classify_group_metric(const MetricSemigroup& inst, const CheckMode& mode, double tol) {
  auto caps = inst.capabilities();
  if (!caps.group) throw NotAGroup(inst.name() + " is not a group");
  const double eps = inst.exact_metric() ? 0.0 : tol;

  PropertySet out;
  out.instance = inst.name();
  auto inv = [&](const Element& x) { return *inst.inverse(x); };
  auto differs = [&](double x, double y) { return std::abs(x - y) > eps; };

  auto examine = [&](const Element& a, const Element& b, const Element& c) {
    double d = inst.distance(a, b);
    if (differs(inst.distance(inst.compose(c, a), inst.compose(c, b)), d)) ++out.violations[0];
    if (differs(inst.distance(inst.compose(a, c), inst.compose(b, c)), d)) ++out.violations[1];
    if (differs(inst.distance(inv(a), inv(b)), d)) ++out.violations[2];
    auto ci = inv(c);
    auto ca = inst.compose(inst.compose(c, a), ci);
    auto cb = inst.compose(inst.compose(c, b), ci);
    if (differs(inst.distance(ca, cb), d)) ++out.violations[3];
  };

  if (std::holds_alternative<Exhaustive>(mode)) {
    if (!caps.finite) throw DomainError("exhaustive mode requires a finite instance");
    auto pool = inst.elements();
    for (const auto& a : pool)
      for (const auto& b : pool)
        for (const auto& c : pool) examine(a, b, c);
  } else {
    const auto& s = std::get<Sampled>(mode);
    if (!inst.has_sampler()) throw MissingSampler(inst.name() + " has no sampler");
    Rng rng(derive_seed(s.seed, 1));
    for (std::size_t i = 0; i < s.count; ++i) {
      auto a = inst.sample(rng);
      auto b = inst.sample(rng);
      auto c = inst.sample(rng);
      examine(a, b, c);
    }
  }
  out.left_invariant = out.violations[0] == 0;
  out.right_invariant = out.violations[1] == 0;
  out.inverse_isometry = out.violations[2] == 0;
  out.conjugation_invariant = out.violations[3] == 0;
  return out;
}

}  // namespace msemi
