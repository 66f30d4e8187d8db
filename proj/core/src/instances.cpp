#include "msemi/instances.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>

#include "msemi/errors.hpp"

namespace msemi {

namespace {

double combine(const std::vector<double>& parts, Norm norm) {
  if (norm == Norm::sup) {
    double m = 0.0;
    for (double p : parts) m = std::max(m, p);
    return m;
  }
  double s = 0.0;
  for (double p : parts) s += p * p;
  return std::sqrt(s);
}

std::string norm_suffix(Norm norm) { return norm == Norm::sup ? ":sup" : ""; }

std::vector<double> coords_from_json(const nlohmann::json& j, std::size_t dim) {
  std::vector<double> out;
  if (j.is_number() && dim == 1) {
    out.push_back(j.get<double>());
  } else if (j.is_array()) {
    for (const auto& c : j) {
      if (!c.is_number()) throw ConfigError("vector coordinate is not a number");
      out.push_back(c.get<double>());
    }
  } else {
    throw ConfigError("expected a number or an array of numbers");
  }
  if (out.size() != dim) throw CarrierMismatch("vector has wrong dimension");
  return out;
}

nlohmann::json coords_to_json(const std::vector<double>& c) {
  if (c.size() == 1) return c[0];
  return nlohmann::json(c);
}

std::int64_t integer_from_json(const nlohmann::json& j) {
  if (!j.is_number_integer()) throw ConfigError("expected an integer element");
  return j.get<std::int64_t>();
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

double wrap01(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r = 0.0;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- RealVectorSpace

RealVectorSpace::RealVectorSpace(std::size_t dim, Norm norm) : dim_(dim), norm_(norm) {
  if (dim == 0) throw DomainError("real vector space needs dimension >= 1");
}

std::string RealVectorSpace::name() const {
  return "real:" + std::to_string(dim_) + norm_suffix(norm_);
}

void RealVectorSpace::validate(const Element& x) const {
  if (x.kind() != ElementKind::vector || x.as_vector().size() != dim_) {
    throw CarrierMismatch(x.to_string() + " is not an element of " + name());
  }
}

std::optional<Element> RealVectorSpace::identity() const {
  return Element::vector(std::vector<double>(dim_, 0.0));
}

std::optional<Element> RealVectorSpace::inverse(const Element& x) const {
  validate(x);
  auto c = x.as_vector();
  for (double& v : c) v = -v;
  return Element::vector(std::move(c));
}

Element RealVectorSpace::sample(Rng& rng) const {
  std::vector<double> c(dim_);
  for (double& v : c) v = -10.0 + 20.0 * uniform01(rng);
  return Element::vector(std::move(c));
}

Element RealVectorSpace::compose_unchecked(const Element& a, const Element& b) const {
  const auto& x = a.as_vector();
  const auto& y = b.as_vector();
  std::vector<double> c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) c[i] = x[i] + y[i];
  return Element::vector(std::move(c));
}

double RealVectorSpace::distance_unchecked(const Element& a, const Element& b) const {
  const auto& x = a.as_vector();
  const auto& y = b.as_vector();
  if (dim_ == 1) return std::abs(x[0] - y[0]);
  std::vector<double> parts(dim_);
  for (std::size_t i = 0; i < dim_; ++i) parts[i] = std::abs(x[i] - y[i]);
  return combine(parts, norm_);
}

Element RealVectorSpace::parse_element(const nlohmann::json& j) const {
  auto e = Element::vector(coords_from_json(j, dim_));
  validate(e);
  return e;
}

nlohmann::json RealVectorSpace::format_element(const Element& x) const {
  validate(x);
  return coords_to_json(x.as_vector());
}

// ---------------------------------------------------------------- Torus

Torus::Torus(std::size_t dim, Norm norm) : dim_(dim), norm_(norm) {
  if (dim == 0) throw DomainError("torus needs dimension >= 1");
}

std::string Torus::name() const { return "torus:" + std::to_string(dim_) + norm_suffix(norm_); }

void Torus::validate(const Element& x) const {
  if (x.kind() != ElementKind::vector || x.as_vector().size() != dim_) {
    throw CarrierMismatch(x.to_string() + " is not an element of " + name());
  }
  for (double c : x.as_vector()) {
    if (!(c >= 0.0 && c < 1.0)) throw CarrierMismatch(x.to_string() + " has a coordinate outside [0, 1)");
  }
}

Element Torus::wrap(std::vector<double> coords) const {
  if (coords.size() != dim_) throw CarrierMismatch("torus coordinates have wrong dimension");
  for (double& c : coords) c = wrap01(c);
  return Element::vector(std::move(coords));
}

std::optional<Element> Torus::identity() const { return Element::vector(std::vector<double>(dim_, 0.0)); }

std::optional<Element> Torus::inverse(const Element& x) const {
  validate(x);
  auto c = x.as_vector();
  for (double& v : c) v = -v;
  return wrap(std::move(c));
}

Element Torus::sample(Rng& rng) const {
  std::vector<double> c(dim_);
  for (double& v : c) v = uniform01(rng);
  return Element::vector(std::move(c));
}

Element Torus::compose_unchecked(const Element& a, const Element& b) const {
  const auto& x = a.as_vector();
  const auto& y = b.as_vector();
  std::vector<double> c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) c[i] = x[i] + y[i];
  return wrap(std::move(c));
}

double Torus::distance_unchecked(const Element& a, const Element& b) const {
  const auto& x = a.as_vector();
  const auto& y = b.as_vector();
  std::vector<double> parts(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    double d = std::abs(x[i] - y[i]);
    parts[i] = std::min(d, 1.0 - d);
  }
  return dim_ == 1 ? parts[0] : combine(parts, norm_);
}

Element Torus::parse_element(const nlohmann::json& j) const {
  auto e = Element::vector(coords_from_json(j, dim_));
  validate(e);
  return e;
}

nlohmann::json Torus::format_element(const Element& x) const {
  validate(x);
  return coords_to_json(x.as_vector());
}

// ---------------------------------------------------------------- CyclicGroup

CyclicGroup::CyclicGroup(std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 1) throw DomainError("cyclic group needs modulus >= 1");
}

void CyclicGroup::validate(const Element& x) const {
  if (x.kind() != ElementKind::integer || x.as_integer() < 0 || x.as_integer() >= modulus_) {
    throw CarrierMismatch(x.to_string() + " is not an element of " + name());
  }
}

std::optional<Element> CyclicGroup::inverse(const Element& x) const {
  validate(x);
  return Element::integer(floor_mod(-x.as_integer(), modulus_));
}

std::vector<Element> CyclicGroup::elements() const {
  if (modulus_ > 100000) throw DomainError(name() + " is too large to enumerate");
  std::vector<Element> out;
  for (std::int64_t i = 0; i < modulus_; ++i) out.push_back(Element::integer(i));
  return out;
}

Element CyclicGroup::sample(Rng& rng) const { return Element::integer(uniform_int(rng, 0, modulus_ - 1)); }

Element CyclicGroup::compose_unchecked(const Element& a, const Element& b) const {
  return Element::integer((a.as_integer() + b.as_integer()) % modulus_);
}

double CyclicGroup::distance_unchecked(const Element& a, const Element& b) const {
  std::int64_t d = std::abs(a.as_integer() - b.as_integer());
  return static_cast<double>(std::min(d, modulus_ - d));
}

Element CyclicGroup::parse_element(const nlohmann::json& j) const {
  auto e = Element::integer(integer_from_json(j));
  validate(e);
  return e;
}

nlohmann::json CyclicGroup::format_element(const Element& x) const {
  validate(x);
  return x.as_integer();
}

// ---------------------------------------------------------------- Integers

void Integers::validate(const Element& x) const {
  if (x.kind() != ElementKind::integer) throw CarrierMismatch(x.to_string() + " is not an element of int");
}

std::optional<Element> Integers::inverse(const Element& x) const {
  validate(x);
  return Element::integer(-x.as_integer());
}

Element Integers::sample(Rng& rng) const { return Element::integer(uniform_int(rng, -10, 10)); }

Element Integers::compose_unchecked(const Element& a, const Element& b) const {
  return Element::integer(a.as_integer() + b.as_integer());
}

double Integers::distance_unchecked(const Element& a, const Element& b) const {
  return static_cast<double>(std::abs(a.as_integer() - b.as_integer()));
}

Element Integers::parse_element(const nlohmann::json& j) const { return Element::integer(integer_from_json(j)); }

nlohmann::json Integers::format_element(const Element& x) const {
  validate(x);
  return x.as_integer();
}

// ---------------------------------------------------------------- LabelledGraphGroup

LabelledGraphGroup::LabelledGraphGroup(int vertices) : vertices_(vertices) {
  if (vertices < 1 || edge_count() > 64) throw DomainError("graph group supports 1..11 vertices");
}

int LabelledGraphGroup::edge_index(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= vertices_ || v >= vertices_) {
    throw CarrierMismatch("invalid edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  if (u > v) std::swap(u, v);
  // Row-major over pairs (u, v), u < v.
  return u * vertices_ - u * (u + 1) / 2 + (v - u - 1);
}

std::pair<int, int> LabelledGraphGroup::edge_endpoints(int index) const {
  for (int u = 0; u < vertices_; ++u) {
    for (int v = u + 1; v < vertices_; ++v) {
      if (edge_index(u, v) == index) return {u, v};
    }
  }
  throw CarrierMismatch("edge index out of range");
}

Element LabelledGraphGroup::graph(const std::vector<std::pair<int, int>>& edges) const {
  std::uint64_t bits = 0;
  for (auto [u, v] : edges) bits ^= std::uint64_t{1} << edge_index(u, v);
  return Element::edges(bits);
}

void LabelledGraphGroup::validate(const Element& x) const {
  if (x.kind() != ElementKind::edges) throw CarrierMismatch(x.to_string() + " is not an element of " + name());
  int e = edge_count();
  if (e < 64 && (x.as_edges() >> e) != 0) throw CarrierMismatch(x.to_string() + " uses edges outside " + name());
}

std::optional<Element> LabelledGraphGroup::inverse(const Element& x) const {
  validate(x);
  return x;
}

std::vector<Element> LabelledGraphGroup::elements() const {
  if (edge_count() > 20) throw DomainError(name() + " is too large to enumerate");
  std::vector<Element> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << edge_count()); ++b) out.push_back(Element::edges(b));
  return out;
}

Element LabelledGraphGroup::sample(Rng& rng) const {
  int e = edge_count();
  std::uint64_t bits = rng();
  if (e < 64) bits &= (std::uint64_t{1} << e) - 1;
  return Element::edges(bits);
}

Element LabelledGraphGroup::compose_unchecked(const Element& a, const Element& b) const {
  return Element::edges(a.as_edges() ^ b.as_edges());
}

double LabelledGraphGroup::distance_unchecked(const Element& a, const Element& b) const {
  return static_cast<double>(std::popcount(a.as_edges() ^ b.as_edges()));
}

Element LabelledGraphGroup::parse_element(const nlohmann::json& j) const {
  if (j.is_number_unsigned() || j.is_number_integer()) {
    auto e = Element::edges(j.get<std::uint64_t>());
    validate(e);
    return e;
  }
  if (!j.is_array()) throw ConfigError("graph element must be an edge list [[u,v],...] or a bitmask");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw ConfigError("edge must be a pair [u, v]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return graph(edges);
}

nlohmann::json LabelledGraphGroup::format_element(const Element& x) const {
  validate(x);
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < edge_count(); ++i) {
    if ((x.as_edges() >> i) & 1U) {
      auto [u, v] = edge_endpoints(i);
      out.push_back({u, v});
    }
  }
  return out;
}

// ---------------------------------------------------------------- SymmetricGroup

SymmetricGroup::SymmetricGroup(int points) : points_(points) {
  if (points < 1 || points > 20) throw DomainError("symmetric group supports 1..20 points");
}

void SymmetricGroup::validate(const Element& x) const {
  if (x.kind() != ElementKind::permutation) throw CarrierMismatch(x.to_string() + " is not an element of " + name());
  const auto& p = x.as_permutation();
  if (static_cast<int>(p.size()) != points_) throw CarrierMismatch(x.to_string() + " has wrong degree for " + name());
  std::uint32_t seen = 0;
  for (int v : p) {
    if (v < 0 || v >= points_ || ((seen >> v) & 1U)) throw CarrierMismatch(x.to_string() + " is not a permutation");
    seen |= 1U << v;
  }
}

std::optional<Element> SymmetricGroup::identity() const {
  std::vector<int> id(points_);
  std::iota(id.begin(), id.end(), 0);
  return Element::permutation(std::move(id));
}

std::optional<Element> SymmetricGroup::inverse(const Element& x) const {
  validate(x);
  const auto& p = x.as_permutation();
  std::vector<int> inv(points_);
  for (int i = 0; i < points_; ++i) inv[p[i]] = i;
  return Element::permutation(std::move(inv));
}

std::vector<Element> SymmetricGroup::elements() const {
  if (points_ > 8) throw DomainError(name() + " is too large to enumerate");
  std::vector<int> p(points_);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Element> out;
  do {
    out.push_back(Element::permutation(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Element SymmetricGroup::sample(Rng& rng) const {
  std::vector<int> p(points_);
  std::iota(p.begin(), p.end(), 0);
  for (int i = points_ - 1; i > 0; --i) {
    auto j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i + 1)));
    std::swap(p[i], p[j]);
  }
  return Element::permutation(std::move(p));
}

Element SymmetricGroup::transposition(int i, int j) const {
  auto p = identity()->as_permutation();
  if (i < 0 || j < 0 || i >= points_ || j >= points_) throw CarrierMismatch("transposition point out of range");
  std::swap(p[i], p[j]);
  return Element::permutation(std::move(p));
}

Element SymmetricGroup::compose_unchecked(const Element& a, const Element& b) const {
  const auto& x = a.as_permutation();
  const auto& y = b.as_permutation();
  std::vector<int> c(points_);
  for (int i = 0; i < points_; ++i) c[i] = x[y[i]];
  return Element::permutation(std::move(c));
}

double SymmetricGroup::distance_unchecked(const Element& a, const Element& b) const {
  const auto& x = a.as_permutation();
  const auto& y = b.as_permutation();
  int d = 0;
  for (int i = 0; i < points_; ++i) d += x[i] != y[i];
  return d;
}

Element SymmetricGroup::parse_element(const nlohmann::json& j) const {
  if (!j.is_array()) throw ConfigError("permutation must be an array of images");
  auto e = Element::permutation(j.get<std::vector<int>>());
  validate(e);
  return e;
}

nlohmann::json SymmetricGroup::format_element(const Element& x) const {
  validate(x);
  return x.as_permutation();
}

// ---------------------------------------------------------------- WordMetricSymmetricGroup

namespace {

std::size_t permutation_rank(const std::vector<int>& p) {
  // Lehmer code.
  std::size_t rank = 0;
  const auto n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    std::size_t f = 1;
    for (std::size_t k = 2; k <= n - 1 - i; ++k) f *= k;
    rank += smaller * f;
  }
  return rank;
}

}  // namespace

WordMetricSymmetricGroup::WordMetricSymmetricGroup(int points, Side side) : base_(points), side_(side) {
  if (points > 7) throw DomainError("word-metric symmetric group supports up to 7 points");
  auto all = base_.elements();
  weights_.assign(all.size(), std::numeric_limits<double>::infinity());
  std::vector<Element> generators;
  std::vector<double> gen_weight;
  for (int i = 0; i + 1 < points; ++i) {
    generators.push_back(base_.transposition(i, i + 1));
    gen_weight.push_back(i + 1);
  }
  // Dijkstra on the Cayley graph from the identity.
  using Item = std::pair<double, Element>;
  auto cmp = [](const Item& a, const Item& b) { return a.first > b.first; };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> queue(cmp);
  auto id = *base_.identity();
  weights_[permutation_rank(id.as_permutation())] = 0.0;
  queue.emplace(0.0, id);
  while (!queue.empty()) {
    auto [w, g] = queue.top();
    queue.pop();
    if (w > weights_[permutation_rank(g.as_permutation())]) continue;
    for (std::size_t k = 0; k < generators.size(); ++k) {
      auto h = base_.compose(g, generators[k]);
      double nw = w + gen_weight[k];
      auto& slot = weights_[permutation_rank(h.as_permutation())];
      if (nw < slot) {
        slot = nw;
        queue.emplace(nw, h);
      }
    }
  }
}

std::string WordMetricSymmetricGroup::name() const {
  return "broken:symword:" + std::to_string(base_.points()) + (side_ == Side::left ? "" : ":right");
}

double WordMetricSymmetricGroup::weight(const Element& g) const {
  validate(g);
  return weights_[permutation_rank(g.as_permutation())];
}

Element WordMetricSymmetricGroup::compose_unchecked(const Element& a, const Element& b) const {
  return base_.compose(a, b);
}

double WordMetricSymmetricGroup::distance_unchecked(const Element& a, const Element& b) const {
  if (side_ == Side::left) return weight(base_.compose(*base_.inverse(a), b));
  return weight(base_.compose(a, *base_.inverse(b)));
}

// ---------------------------------------------------------------- PositiveRealsAdditive

void PositiveRealsAdditive::validate(const Element& x) const {
  if (x.kind() != ElementKind::scalar || !(x.as_scalar() > 0.0) || !std::isfinite(x.as_scalar())) {
    throw CarrierMismatch(x.to_string() + " is not an element of posreal");
  }
}

Element PositiveRealsAdditive::sample(Rng& rng) const { return Element::scalar(10.0 * (1.0 - uniform01(rng))); }

Element PositiveRealsAdditive::compose_unchecked(const Element& a, const Element& b) const {
  return Element::scalar(a.as_scalar() + b.as_scalar());
}

double PositiveRealsAdditive::distance_unchecked(const Element& a, const Element& b) const {
  return std::abs(a.as_scalar() - b.as_scalar());
}

Element PositiveRealsAdditive::parse_element(const nlohmann::json& j) const {
  if (!j.is_number()) throw ConfigError("posreal element must be a number");
  auto e = Element::scalar(j.get<double>());
  validate(e);
  return e;
}

nlohmann::json PositiveRealsAdditive::format_element(const Element& x) const {
  validate(x);
  return x.as_scalar();
}

// ---------------------------------------------------------------- MultiplicativeReals

void MultiplicativeReals::validate(const Element& x) const {
  if (x.kind() != ElementKind::scalar || !(x.as_scalar() > 0.0) || !std::isfinite(x.as_scalar())) {
    throw CarrierMismatch(x.to_string() + " is not an element of broken:mulreal");
  }
}

std::optional<Element> MultiplicativeReals::inverse(const Element& x) const {
  validate(x);
  return Element::scalar(1.0 / x.as_scalar());
}

Element MultiplicativeReals::sample(Rng& rng) const { return Element::scalar(10.0 * (1.0 - uniform01(rng))); }

Element MultiplicativeReals::compose_unchecked(const Element& a, const Element& b) const {
  return Element::scalar(a.as_scalar() * b.as_scalar());
}

double MultiplicativeReals::distance_unchecked(const Element& a, const Element& b) const {
  return std::abs(a.as_scalar() - b.as_scalar());
}

Element MultiplicativeReals::parse_element(const nlohmann::json& j) const {
  if (!j.is_number()) throw ConfigError("mulreal element must be a number");
  auto e = Element::scalar(j.get<double>());
  validate(e);
  return e;
}

nlohmann::json MultiplicativeReals::format_element(const Element& x) const {
  validate(x);
  return x.as_scalar();
}

}  // namespace msemi
