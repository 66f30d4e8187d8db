#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "msemi/semigroup.hpp"

namespace msemi {

enum class Norm { euclidean, sup };

/// (R^d, +) with the Euclidean or sup norm distance.
class RealVectorSpace final : public MetricSemigroup {
 public:
  RealVectorSpace(std::size_t dim, Norm norm);

  std::string name() const override;
  Capabilities capabilities() const override { return {true, true, true, false, true}; }
  void validate(const Element& x) const override;
  std::optional<Element> identity() const override;
  std::optional<Element> inverse(const Element& x) const override;
  bool has_sampler() const override { return true; }
  Element sample(Rng& rng) const override;
  Element probe() const override { return *identity(); }
  bool exact_metric() const override { return false; }
  Element parse_element(const nlohmann::json& j) const override;
  nlohmann::json format_element(const Element& x) const override;

  std::size_t dim() const { return dim_; }
  Norm norm() const { return norm_; }

 protected:
  Element compose_unchecked(const Element& a, const Element& b) const override;
  double distance_unchecked(const Element& a, const Element& b) const override;

 private:
  std::size_t dim_;
  Norm norm_;
};

/// R^d / Z^d, coordinates in [0, 1). Coordinate distance min(|x-y|, 1-|x-y|),
/// combined by the chosen norm.
class Torus final : public MetricSemigroup {
 public:
  Torus(std::size_t dim, Norm norm);

  std::string name() const override;
  Capabilities capabilities() const override { return {true, true, true, false, true}; }
  void validate(const Element& x) const override;
  std::optional<Element> identity() const override;
  std::optional<Element> inverse(const Element& x) const override;
  bool has_sampler() const override { return true; }
  Element sample(Rng& rng) const override;
  Element probe() const override { return *identity(); }
  bool exact_metric() const override { return false; }
  Element parse_element(const nlohmann::json& j) const override;
  nlohmann::json format_element(const Element& x) const override;

  std::size_t dim() const { return dim_; }
  /// Reduces arbitrary real coordinates into [0, 1).
  Element wrap(std::vector<double> coords) const;

 protected:
  Element compose_unchecked(const Element& a, const Element& b) const override;
  double distance_unchecked(const Element& a, const Element& b) const override;

 private:
  std::size_t dim_;
  Norm norm_;
};

/// Z/mZ with d(a, b) = min(|a-b|, m-|a-b|).
class CyclicGroup final : public MetricSemigroup {
 public:
  explicit CyclicGroup(std::int64_t modulus);

  std::string name() const override { return "cyclic:" + std::to_string(modulus_); }
  Capabilities capabilities() const override { return {true, true, true, true, true}; }
  void validate(const Element& x) const override;
  std::optional<Element> identity() const override { return Element::integer(0); }
  std::optional<Element> inverse(const Element& x) const override;
  std::vector<Element> elements() const override;
  bool has_sampler() const override { return true; }
  Element sample(Rng& rng) const override;
  Element probe() const override { return Element::integer(0); }
  Element parse_element(const nlohmann::json& j) const override;
  nlohmann::json format_element(const Element& x) const override;

  std::int64_t modulus() const { return modulus_; }

 protected:
  Element compose_unchecked(const Element& a, const Element& b) const override;
  double distance_unchecked(const Element& a, const Element& b) const override;

 private:
  std::int64_t modulus_;
};

/// (Z, +) with |a - b|.
class Integers final : public MetricSemigroup {
 public:
  std::string name() const override { return "int"; }
  Capabilities capabilities() const override { return {true, true, true, false, true}; }
  void validate(const Element& x) const override;
  std::optional<Element> identity() const override { return Element::integer(0); }
  std::optional<Element> inverse(const Element& x) const override;
  bool has_sampler() const override { return true; }
  /// Uniform on [-10, 10].
  Element sample(Rng& rng) const override;
  Element probe() const override { return Element::integer(0); }
  Element parse_element(const nlohmann::json& j) const override;
  nlohmann::json format_element(const Element& x) const override;

 protected:
  Element compose_unchecked(const Element& a, const Element& b) const override;
  double distance_unchecked(const Element& a, const Element& b) const override;
};

/// Labelled simple graphs on V vertices: edge sets under symmetric difference,
/// distance = number of edges in which two graphs differ. A 2-torsion group.
class LabelledGraphGroup final : public MetricSemigroup {
 public:
  explicit LabelledGraphGroup(int vertices);

  std::string name() const override { return "graphgroup:" + std::to_string(vertices_); }
  Capabilities capabilities() const override { return {true, true, true, true, true}; }
  void validate(const Element& x) const override;
  std::optional<Element> identity() const override { return Element::edges(0); }
  std::optional<Element> inverse(const Element& x) const override;
  std::vector<Element> elements() const override;
  bool has_sampler() const override { return true; }
  Element sample(Rng& rng) const override;
  Element probe() const override { return Element::edges(0); }
  Element parse_element(const nlohmann::json& j) const override;
  nlohmann::json format_element(const Element& x) const override;

  int vertices() const { return vertices_; }
  int edge_count() const { return vertices_ * (vertices_ - 1) / 2; }
  /// Bit position of the edge {u, v}, u != v.
  int edge_index(int u, int v) const;
  std::pair<int, int> edge_endpoints(int index) const;
  Element graph(const std::vector<std::pair<int, int>>& edges) const;

 protected:
  Element compose_unchecked(const Element& a, const Element& b) const override;
  double distance_unchecked(const Element& a, const Element& b) const override;

 private:
  int vertices_;
};

/// S_k with composition (a b)(i) = a(b(i)) and the Hamming metric
/// d(a, b) = #{i : a(i) != b(i)}, which is bi-invariant.
class SymmetricGroup final : public MetricSemigroup {
 public:
  explicit SymmetricGroup(int points);

  std::string name() const override { return "sym:" + std::to_string(points_); }
  Capabilities capabilities() const override { return {points_ <= 2, true, true, true, true}; }
  void validate(const Element& x) const override;
  std::optional<Element> identity() const override;
  std::optional<Element> inverse(const Element& x) const override;
  std::vector<Element> elements() const override;
  bool has_sampler() const override { return true; }
  Element sample(Rng& rng) const override;
  Element probe() const override { return *identity(); }
  Element parse_element(const nlohmann::json& j) const override;
  nlohmann::json format_element(const Element& x) const override;

  int points() const { return points_; }
  /// The transposition swapping points i and j (0-based).
  Element transposition(int i, int j) const;

 protected:
  Element compose_unchecked(const Element& a, const Element& b) const override;
  double distance_unchecked(const Element& a, const Element& b) const override;

 private:
  int points_;
};

/// S_k with a weighted word metric over the adjacent transpositions
/// s_i = (i, i+1), weight(s_i) = i + 1. The weight function is not
/// conjugation-invariant, so d(a, b) = w(a^-1 b) is left- but not
/// right-invariant (or the mirror image for Side::right). Not a metric
/// semigroup; shipped for negative tests.
class WordMetricSymmetricGroup final : public MetricSemigroup {
 public:
  enum class Side { left, right };
  WordMetricSymmetricGroup(int points, Side side);

  std::string name() const override;
  Capabilities capabilities() const override { return {false, true, true, true, true}; }
  void validate(const Element& x) const override { base_.validate(x); }
  std::optional<Element> identity() const override { return base_.identity(); }
  std::optional<Element> inverse(const Element& x) const override { return base_.inverse(x); }
  std::vector<Element> elements() const override { return base_.elements(); }
  bool has_sampler() const override { return true; }
  Element sample(Rng& rng) const override { return base_.sample(rng); }
  Element probe() const override { return base_.probe(); }
  Element parse_element(const nlohmann::json& j) const override { return base_.parse_element(j); }
  nlohmann::json format_element(const Element& x) const override { return base_.format_element(x); }

  /// Word length of g.
  double weight(const Element& g) const;

 protected:
  Element compose_unchecked(const Element& a, const Element& b) const override;
  double distance_unchecked(const Element& a, const Element& b) const override;

 private:
  SymmetricGroup base_;
  Side side_;
  std::vector<double> weights_;  // indexed by lexicographic rank
};

/// ((0, inf), +) with |a - b|: a metric semigroup without identity.
class PositiveRealsAdditive final : public MetricSemigroup {
 public:
  std::string name() const override { return "posreal"; }
  Capabilities capabilities() const override { return {true, false, false, false, false}; }
  void validate(const Element& x) const override;
  bool has_sampler() const override { return true; }
  /// Uniform on (0, 10].
  Element sample(Rng& rng) const override;
  Element probe() const override { return Element::scalar(1.0); }
  bool exact_metric() const override { return false; }
  Element parse_element(const nlohmann::json& j) const override;
  nlohmann::json format_element(const Element& x) const override;

 protected:
  Element compose_unchecked(const Element& a, const Element& b) const override;
  double distance_unchecked(const Element& a, const Element& b) const override;
};

/// ((0, inf), *) with |a - b|. The metric is not translation-invariant;
/// shipped for negative tests.
class MultiplicativeReals final : public MetricSemigroup {
 public:
  std::string name() const override { return "broken:mulreal"; }
  Capabilities capabilities() const override { return {true, true, true, false, false}; }
  void validate(const Element& x) const override;
  std::optional<Element> identity() const override { return Element::scalar(1.0); }
  std::optional<Element> inverse(const Element& x) const override;
  bool has_sampler() const override { return true; }
  Element sample(Rng& rng) const override;
  Element probe() const override { return Element::scalar(1.0); }
  bool exact_metric() const override { return false; }
  Element parse_element(const nlohmann::json& j) const override;
  nlohmann::json format_element(const Element& x) const override;

 protected:
  Element compose_unchecked(const Element& a, const Element& b) const override;
  double distance_unchecked(const Element& a, const Element& b) const override;
};

/// Parses an instance spec string:
///   cyclic:M  int  graphgroup:V  sym:K  torus:D[:sup|:euclid]
///   real:D[:sup|:euclid]  posreal  complete:<spec>
///   broken:mulreal  broken:symword:K[:left|:right]
/// Throws ConfigError on malformed input.
InstancePtr parse_instance(std::string_view spec);

/// Instance strings of the non-broken catalog, for sweeps and tests.
std::vector<std::string> catalog_instance_specs();

}  // namespace msemi
