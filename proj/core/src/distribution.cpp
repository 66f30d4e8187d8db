#include "msemi/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "msemi/errors.hpp"

namespace msemi {

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw DomainError("distribution needs at least one atom");
  Real total;
  for (const auto& a : atoms_) {
    if (a.probability.sign() <= 0) throw DomainError("atom " + a.value.to_string() + " has non-positive probability");
    total += a.probability;
  }
  if (total.is_exact()) {
    if (total != Real(1)) throw DomainError("probabilities sum to " + total.to_string() + ", not 1");
  } else if (std::abs(total.to_double() - 1.0) > 1e-12) {
    throw DomainError("probabilities sum to " + total.to_string() + ", not 1");
  }
  std::vector<Element> values;
  values.reserve(atoms_.size());
  for (const auto& a : atoms_) values.push_back(a.value);
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw DomainError("distribution atoms are not distinct");
  }
  double run = 0.0;
  for (const auto& a : atoms_) {
    run += a.probability.to_double();
    cumulative_.push_back(run);
  }
}

DiscreteDistribution DiscreteDistribution::merged(std::vector<Atom> atoms) {
  std::map<Element, Real> mass;
  std::vector<Element> order;
  for (auto& a : atoms) {
    auto [it, inserted] = mass.try_emplace(a.value, a.probability);
    if (inserted) {
      order.push_back(a.value);
    } else {
      it->second += a.probability;
    }
  }
  std::vector<Atom> out;
  out.reserve(order.size());
  for (auto& v : order) out.push_back({v, mass.at(v)});
  return DiscreteDistribution(std::move(out));
}

DiscreteDistribution DiscreteDistribution::point_mass(Element x) {
  return DiscreteDistribution({{std::move(x), Real(1)}});
}

DiscreteDistribution DiscreteDistribution::uniform(std::vector<Element> values) {
  std::vector<Atom> atoms;
  const auto k = static_cast<std::int64_t>(values.size());
  for (auto& v : values) atoms.push_back({std::move(v), Real::ratio(1, k)});
  return DiscreteDistribution(std::move(atoms));
}

bool DiscreteDistribution::is_exact() const {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.probability.is_exact(); });
}

const Element& DiscreteDistribution::sample(Rng& rng) const {
  double u = uniform01(rng) * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  auto idx = static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - cumulative_.begin(),
                                                               static_cast<std::ptrdiff_t>(atoms_.size()) - 1));
  return atoms_[idx].value;
}

}  // namespace msemi
