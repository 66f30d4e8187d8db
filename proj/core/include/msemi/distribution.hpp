#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "msemi/element.hpp"
#include "msemi/real.hpp"
#include "msemi/rng.hpp"

namespace msemi {

struct Atom {
  Element value;
  Real probability;
};

/// A finitely supported law. Probabilities are positive and sum to 1 (exactly
/// when all are rational, within 1e-12 otherwise); atoms are distinct.
class DiscreteDistribution {
 public:
  /// Validates and keeps atom order. Throws DomainError on invalid input.
  explicit DiscreteDistribution(std::vector<Atom> atoms);

  /// Like the constructor, but merges repeated values by adding their mass.
  static DiscreteDistribution merged(std::vector<Atom> atoms);
  static DiscreteDistribution point_mass(Element x);
  /// Equal mass 1/k on each of k distinct values.
  static DiscreteDistribution uniform(std::vector<Element> values);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool is_exact() const;

  /// Inverse-CDF draw using double cumulative weights.
  const Element& sample(Rng& rng) const;

 private:
  std::vector<Atom> atoms_;
  std::vector<double> cumulative_;
};

/// A generator for a continuous (or otherwise non-enumerable) variable.
struct Sampler {
  std::function<Element(Rng&)> draw;
  std::string description;
};

using Variable = std::variant<DiscreteDistribution, Sampler>;

}  // namespace msemi
