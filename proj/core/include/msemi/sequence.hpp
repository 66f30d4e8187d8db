#pragma once

#include <optional>
#include <span>
#include <vector>

#include "msemi/distribution.hpp"
#include "msemi/semigroup.hpp"

namespace msemi {

/// Independent variables X_1..X_n on one instance, with basepoints z0, z1.
class IndependentSequence {
 public:
  /// Basepoints default to the identity on monoids, otherwise to the first
  /// atom of X_1 (which must then be discrete). All atoms are validated
  /// against the instance.
  IndependentSequence(InstancePtr instance, std::vector<Variable> variables,
                      std::optional<Element> z0 = std::nullopt, std::optional<Element> z1 = std::nullopt);

  const MetricSemigroup& instance() const { return *instance_; }
  const InstancePtr& instance_ptr() const { return instance_; }
  const std::vector<Variable>& variables() const { return variables_; }
  std::size_t size() const { return variables_.size(); }
  const Element& z0() const { return z0_; }
  const Element& z1() const { return z1_; }

  bool all_discrete() const;
  /// All variables discrete with rational probabilities.
  bool is_exact() const;
  /// Product of support sizes, saturating at UINT64_MAX.
  std::uint64_t joint_outcomes() const;

  const DiscreteDistribution& distribution(std::size_t j) const;

  /// Same variables and basepoints re-homed on the monoid completion (a no-op
  /// when the instance already has an identity).
  IndependentSequence completed() const;
  IndependentSequence with_basepoints(Element z0, Element z1) const;
  IndependentSequence with_variables(std::vector<Variable> variables) const;

 private:
  InstancePtr instance_;
  std::vector<Variable> variables_;
  Element z0_;
  Element z1_;
};

/// Path statistics for one outcome, 0-based: S[j] = X_1 ... X_{j+1},
/// D[j] = d(z1, z0 S[j]), U[j] = max_{i<=j} D[i], Y[j] = d(z0, z0 X_{j+1}),
/// M[j] = max_{i<=j} Y[i].
struct PathTrace {
  std::vector<Element> S;
  std::vector<double> D;
  std::vector<double> U;
  std::vector<double> Y;
  std::vector<double> M;

  std::size_t size() const { return S.size(); }
  double u_n() const { return U.back(); }
  double m_n() const { return M.back(); }
};

PathTrace partial_products(const IndependentSequence& seq, std::span<const Element> outcome);

}  // namespace msemi
