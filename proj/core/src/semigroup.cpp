#include "msemi/semigroup.hpp"

#include "msemi/errors.hpp"

namespace msemi {

Element MetricSemigroup::compose(const Element& a, const Element& b) const {
  validate(a);
  validate(b);
  return compose_unchecked(a, b);
}

double MetricSemigroup::distance(const Element& a, const Element& b) const {
  validate(a);
  validate(b);
  return distance_unchecked(a, b);
}

double MetricSemigroup::magnitude(const Element& z0, const Element& x) const {
  validate(z0);
  validate(x);
  return distance_unchecked(z0, compose_unchecked(z0, x));
}

std::optional<Element> MetricSemigroup::inverse(const Element& x) const {
  validate(x);
  return std::nullopt;
}

std::vector<Element> MetricSemigroup::elements() const {
  throw DomainError(name() + " has no exhaustive carrier iterator");
}

Element MetricSemigroup::sample(Rng&) const { throw MissingSampler(name() + " has no sampler"); }

bool approx_equal(const MetricSemigroup& inst, const Element& a, const Element& b, double tol) {
  if (inst.exact_metric()) return a == b;
  return inst.distance(a, b) <= tol;
}

}  // namespace msemi
