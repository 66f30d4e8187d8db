#pragma once

#include "msemi/semigroup.hpp"

namespace msemi {

/// The smallest metric monoid G' = G u {1'} containing a metric semigroup G
/// that lacks an identity.
///
/// d(1', z) is defined as d(a, a z) for a fixed probe a of the base instance.
/// Translation invariance makes that value independent of a, so the choice
/// of probe does not matter; distance_to_unit_via() exposes the dependence so
/// it can be tested.
class MonoidCompletion final : public MetricSemigroup {
 public:
  explicit MonoidCompletion(InstancePtr base);

  std::string name() const override { return "complete:" + base_->name(); }
  Capabilities capabilities() const override;
  void validate(const Element& x) const override;
  std::optional<Element> identity() const override { return Element::adjoined_unit(); }
  std::vector<Element> elements() const override;
  bool has_sampler() const override { return base_->has_sampler(); }
  /// Returns 1' with probability 1/8, otherwise a base sample.
  Element sample(Rng& rng) const override;
  Element probe() const override { return Element::adjoined_unit(); }
  bool exact_metric() const override { return base_->exact_metric(); }
  Element parse_element(const nlohmann::json& j) const override;
  nlohmann::json format_element(const Element& x) const override;

  const MetricSemigroup& base() const { return *base_; }
  const InstancePtr& base_ptr() const { return base_; }

  /// d(probe, probe z) for an explicit probe from the base carrier.
  double distance_to_unit_via(const Element& probe, const Element& z) const;

 protected:
  Element compose_unchecked(const Element& a, const Element& b) const override;
  double distance_unchecked(const Element& a, const Element& b) const override;

 private:
  InstancePtr base_;
  Element probe_;
};

/// Returns `inst` itself when it already has an identity, else its monoid
/// completion. Idempotent: adjoin_identity(adjoin_identity(g)) is the same
/// object as adjoin_identity(g).
InstancePtr adjoin_identity(const InstancePtr& inst);

}  // namespace msemi
