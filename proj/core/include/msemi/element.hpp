#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace msemi {

/// Bit i set means edge i (in EdgeIndex order) is present.
struct EdgeSet {
  std::uint64_t bits = 0;
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;
};

/// One-line notation, 0-based: images[i] is the image of point i.
struct Permutation {
  std::vector<int> images;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

struct RealVector {
  std::vector<double> coords;
  friend auto operator<=>(const RealVector&, const RealVector&) = default;
};

/// The identity 1' adjoined by monoid completion.
struct AdjoinedUnit {
  friend auto operator<=>(const AdjoinedUnit&, const AdjoinedUnit&) = default;
};

enum class ElementKind { integer, scalar, edges, permutation, vector, adjoined_unit };

/// A carrier value. Which alternative is meaningful depends on the instance.
class Element {
 public:
  using Storage = std::variant<std::int64_t, double, EdgeSet, Permutation, RealVector, AdjoinedUnit>;

  Element() = default;
  explicit Element(Storage s) : value_(std::move(s)) {}

  static Element integer(std::int64_t v) { return Element(Storage(v)); }
  static Element scalar(double v) { return Element(Storage(v)); }
  static Element edges(std::uint64_t bits) { return Element(Storage(EdgeSet{bits})); }
  static Element permutation(std::vector<int> images) {
    return Element(Storage(Permutation{std::move(images)}));
  }
  static Element vector(std::vector<double> coords) {
    return Element(Storage(RealVector{std::move(coords)}));
  }
  static Element adjoined_unit() { return Element(Storage(AdjoinedUnit{})); }

  ElementKind kind() const { return static_cast<ElementKind>(value_.index()); }
  bool is_adjoined_unit() const { return kind() == ElementKind::adjoined_unit; }

  // Accessors throw CarrierMismatch when the element holds another kind.
  std::int64_t as_integer() const;
  double as_scalar() const;
  std::uint64_t as_edges() const;
  const std::vector<int>& as_permutation() const;
  const std::vector<double>& as_vector() const;

  const Storage& storage() const { return value_; }

  std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b) { return a.value_ == b.value_; }
  friend bool operator<(const Element& a, const Element& b) { return a.value_ < b.value_; }

 private:
  Storage value_ = std::int64_t{0};
};

}  // namespace msemi
