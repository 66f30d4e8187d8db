#pragma once

#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "msemi/element.hpp"
#include "msemi/rng.hpp"

namespace msemi {

struct Capabilities {
  bool abelian = false;
  bool has_identity = false;
  bool group = false;
  bool finite = false;
  bool complete = false;
};

/// A semigroup with a metric that is invariant under left and right
/// translation. Instances are immutable once constructed and may be shared
/// across threads.
///
/// Subclasses implement the *_unchecked hooks; the public entry points validate
/// their arguments first and raise CarrierMismatch for foreign elements.
class MetricSemigroup {
 public:
  virtual ~MetricSemigroup() = default;

  /// Instance spec string, e.g. "cyclic:6".
  virtual std::string name() const = 0;
  virtual Capabilities capabilities() const = 0;

  /// Throws CarrierMismatch unless `x` belongs to the carrier.
  virtual void validate(const Element& x) const = 0;

  Element compose(const Element& a, const Element& b) const;
  double distance(const Element& a, const Element& b) const;

  /// d(z0, z0 x): the magnitude of x seen from basepoint z0.
  double magnitude(const Element& z0, const Element& x) const;

  virtual std::optional<Element> identity() const { return std::nullopt; }

  /// Inverse of x; only groups provide one.
  virtual std::optional<Element> inverse(const Element& x) const;

  /// Exhaustive carrier listing; DomainError if the instance is infinite or too large.
  virtual std::vector<Element> elements() const;

  virtual bool has_sampler() const { return false; }
  /// Draws a carrier element (MissingSampler if unsupported). Used for sampled checks.
  virtual Element sample(Rng& rng) const;

  /// Fixed element used to measure distances to an adjoined identity.
  virtual Element probe() const = 0;

  /// True when distances are exact small integers/dyadics, so equality tests need no tolerance.
  virtual bool exact_metric() const { return true; }

  virtual Element parse_element(const nlohmann::json& j) const = 0;
  virtual nlohmann::json format_element(const Element& x) const = 0;

 protected:
  virtual Element compose_unchecked(const Element& a, const Element& b) const = 0;
  virtual double distance_unchecked(const Element& a, const Element& b) const = 0;

  friend class MonoidCompletion;
};

using InstancePtr = std::shared_ptr<const MetricSemigroup>;

/// Equality on exact carriers, distance within `tol` on real-valued ones.
bool approx_equal(const MetricSemigroup& inst, const Element& a, const Element& b, double tol);

}  // namespace msemi
