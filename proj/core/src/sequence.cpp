#include "msemi/sequence.hpp"

#include <algorithm>
#include <limits>

#include "msemi/completion.hpp"
#include "msemi/errors.hpp"

namespace msemi {

IndependentSequence::IndependentSequence(InstancePtr instance, std::vector<Variable> variables,
                                         std::optional<Element> z0, std::optional<Element> z1)
    : instance_(std::move(instance)), variables_(std::move(variables)) {
  if (!instance_) throw DomainError("sequence without an instance");
  if (variables_.empty()) throw DomainError("sequence needs at least one variable");
  for (const auto& v : variables_) {
    if (const auto* d = std::get_if<DiscreteDistribution>(&v)) {
      for (const auto& a : d->atoms()) instance_->validate(a.value);
    } else if (!std::get<Sampler>(v).draw) {
      throw DomainError("sampler variable without a draw function");
    }
  }
  auto fallback = [&]() -> Element {
    if (auto id = instance_->identity()) return *id;
    const auto* d = std::get_if<DiscreteDistribution>(&variables_.front());
    if (!d) throw DomainError("basepoints must be given when X_1 is sampler-backed on a semigroup");
    return d->atoms().front().value;
  };
  z0_ = z0 ? *z0 : fallback();
  z1_ = z1 ? *z1 : fallback();
  instance_->validate(z0_);
  instance_->validate(z1_);
}

bool IndependentSequence::all_discrete() const {
  return std::all_of(variables_.begin(), variables_.end(),
                     [](const Variable& v) { return std::holds_alternative<DiscreteDistribution>(v); });
}

bool IndependentSequence::is_exact() const {
  return std::all_of(variables_.begin(), variables_.end(), [](const Variable& v) {
    const auto* d = std::get_if<DiscreteDistribution>(&v);
    return d && d->is_exact();
  });
}

std::uint64_t IndependentSequence::joint_outcomes() const {
  std::uint64_t total = 1;
  for (const auto& v : variables_) {
    const auto* d = std::get_if<DiscreteDistribution>(&v);
    if (!d) return std::numeric_limits<std::uint64_t>::max();
    if (total > std::numeric_limits<std::uint64_t>::max() / d->size()) return std::numeric_limits<std::uint64_t>::max();
    total *= d->size();
  }
  return total;
}

const DiscreteDistribution& IndependentSequence::distribution(std::size_t j) const {
  const auto* d = std::get_if<DiscreteDistribution>(&variables_.at(j));
  if (!d) throw DomainError("variable " + std::to_string(j + 1) + " is sampler-backed");
  return *d;
}

IndependentSequence IndependentSequence::completed() const {
  auto monoid = adjoin_identity(instance_);
  if (monoid == instance_) return *this;
  return IndependentSequence(monoid, variables_, z0_, z1_);
}

IndependentSequence IndependentSequence::with_basepoints(Element z0, Element z1) const {
  return IndependentSequence(instance_, variables_, std::move(z0), std::move(z1));
}

IndependentSequence IndependentSequence::with_variables(std::vector<Variable> variables) const {
  return IndependentSequence(instance_, std::move(variables), z0_, z1_);
}

PathTrace partial_products(const IndependentSequence& seq, std::span<const Element> outcome) {
  if (outcome.size() != seq.size()) throw DomainError("outcome length does not match the sequence length");
  const auto& g = seq.instance();
  PathTrace t;
  const auto n = outcome.size();
  t.S.reserve(n);
  t.D.reserve(n);
  t.U.reserve(n);
  t.Y.reserve(n);
  t.M.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    t.S.push_back(j == 0 ? outcome[0] : g.compose(t.S.back(), outcome[j]));
    double u = g.distance(seq.z1(), g.compose(seq.z0(), t.S.back()));
    double y = g.magnitude(seq.z0(), outcome[j]);
    t.D.push_back(u);
    t.U.push_back(j == 0 ? u : std::max(t.U.back(), u));
    t.Y.push_back(y);
    t.M.push_back(j == 0 ? y : std::max(t.M.back(), y));
  }
  return t;
}

}  // namespace msemi
