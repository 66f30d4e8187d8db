#include "msemi/element.hpp"

#include <charconv>
#include <sstream>

#include "msemi/errors.hpp"

namespace msemi {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

template <typename T>
const T& get_or_throw(const Element::Storage& s, const char* what) {
  if (auto* p = std::get_if<T>(&s)) return *p;
  throw CarrierMismatch(std::string("element is not ") + what);
}

}  // namespace

std::int64_t Element::as_integer() const { return get_or_throw<std::int64_t>(value_, "an integer"); }
double Element::as_scalar() const { return get_or_throw<double>(value_, "a scalar"); }
std::uint64_t Element::as_edges() const { return get_or_throw<EdgeSet>(value_, "an edge set").bits; }
const std::vector<int>& Element::as_permutation() const {
  return get_or_throw<Permutation>(value_, "a permutation").images;
}
const std::vector<double>& Element::as_vector() const {
  return get_or_throw<RealVector>(value_, "a real vector").coords;
}

std::string Element::to_string() const {
  struct Visitor {
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const EdgeSet& e) const {
      std::ostringstream os;
      os << "edges{0x" << std::hex << e.bits << "}";
      return os.str();
    }
    std::string operator()(const Permutation& p) const {
      std::string out = "[";
      for (std::size_t i = 0; i < p.images.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.images[i]);
      }
      return out + "]";
    }
    std::string operator()(const RealVector& v) const {
      std::string out = "(";
      for (std::size_t i = 0; i < v.coords.size(); ++i) {
        if (i) out += ",";
        out += format_double(v.coords[i]);
      }
      return out + ")";
    }
    std::string operator()(const AdjoinedUnit&) const { return "1'"; }
  };
  return std::visit(Visitor{}, value_);
}

}  // namespace msemi
