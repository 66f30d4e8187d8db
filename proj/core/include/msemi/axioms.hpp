#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "msemi/semigroup.hpp"

namespace msemi {

struct Exhaustive {};
struct Sampled {
  std::size_t count = 10000;
  std::uint64_t seed = 0;
};
using CheckMode = std::variant<Exhaustive, Sampled>;

struct AxiomCheck {
  std::string axiom;
  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst_excess = 0.0;  // largest amount by which the axiom failed
  std::string worst_witness;
};

struct AxiomReport {
  std::string instance;
  std::string mode;
  double tolerance = 0.0;
  std::vector<AxiomCheck> checks;

  std::size_t total_violations() const;
  bool ok() const { return total_violations() == 0; }
  const AxiomCheck& check(std::string_view axiom) const;
};

/// Axiom names used in AxiomReport::checks.
namespace axiom {
inline constexpr std::string_view associativity = "associativity";
inline constexpr std::string_view nonnegativity = "nonnegativity";
inline constexpr std::string_view symmetry = "symmetry";
inline constexpr std::string_view indiscernibles = "identity_of_indiscernibles";
inline constexpr std::string_view triangle = "triangle";
inline constexpr std::string_view left_invariance = "left_invariance";
inline constexpr std::string_view right_invariance = "right_invariance";
inline constexpr std::string_view two_sided_triangle = "two_sided_triangle";
}  // namespace axiom

/// Checks associativity, the metric axioms, left and right translation
/// invariance, and d(y1 y2, z1 z2) <= d(y1, z1) + d(y2, z2).
///
/// Exhaustive mode walks every tuple of the carrier (is_finite instances only);
/// sampled mode draws `count` random 4-tuples from the instance sampler.
AxiomReport verify_axioms(const MetricSemigroup& inst, const CheckMode& mode, double tol = 1e-12);

/// Exhaustive check over an explicit pool of elements.
AxiomReport verify_axioms_over(const MetricSemigroup& inst, std::span<const Element> pool, double tol = 1e-12);

/// Properties of a metric on a group, each with its violation count.
struct PropertySet {
  std::string instance;
  bool left_invariant = false;     // (1) d(ca, cb) = d(a, b)
  bool right_invariant = false;    // (2) d(ac, bc) = d(a, b)
  bool inverse_isometry = false;   // (3) d(a^-1, b^-1) = d(a, b)
  bool conjugation_invariant = false;  // (4) d(gag^-1, gbg^-1) = d(a, b)
  std::size_t violations[4] = {0, 0, 0, 0};

  int count() const;
  /// Any two of the four properties imply the other two, so count() is 0, 1 or 4.
  bool implication_consistent() const { return count() != 2 && count() != 3; }
};

/// Classifies which of the four invariance properties a group metric has.
/// Throws NotAGroup unless the instance provides inverses.
PropertySet classify_group_metric(const MetricSemigroup& inst, const CheckMode& mode, double tol = 1e-12);

/// Telescoping bound for the completion of a semigroup: d(z0..zk, z0..z_{k+l})
/// <= sum_i d(z0, z0 z_{k+i}). Returns lhs - rhs (<= 0 when it holds).
double telescoping_excess(const MetricSemigroup& inst, std::span<const Element> z, std::size_t k);

}  // namespace msemi
