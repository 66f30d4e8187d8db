#include "msemi/axioms.hpp"

#include <cmath>
#include <sstream>

#include "msemi/errors.hpp"

namespace msemi {

namespace {

constexpr double kMaxExhaustiveQuads = 2.0e8;

class Recorder {
 public:
  explicit Recorder(std::string_view name) { check_.axiom = std::string(name); }

  // excess > 0 is a violation.
  template <typename WitnessFn>
  void record(double excess, WitnessFn&& witness) {
    ++check_.checked;
    if (excess > 0.0) {
      ++check_.violations;
      if (check_.violations == 1 || excess > check_.worst_excess) {
        check_.worst_excess = excess;
        check_.worst_witness = witness();
      }
    }
  }

  AxiomCheck take() { return std::move(check_); }

 private:
  AxiomCheck check_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

class AxiomChecker {
 public:
  AxiomChecker(const MetricSemigroup& inst, double tol)
      : inst_(inst), tol_(inst.exact_metric() ? 0.0 : tol) {}

  void pair(const Element& a, const Element& b) {
    double dab = inst_.distance(a, b);
    double dba = inst_.distance(b, a);
    nonneg_.record(-dab, [&] { return "d(" + a.to_string() + "," + b.to_string() + ")=" + fmt(dab); });
    symmetry_.record(std::abs(dab - dba) - tol_, [&] {
      return "a=" + a.to_string() + ", b=" + b.to_string() + ": d(a,b)=" + fmt(dab) + " != d(b,a)=" + fmt(dba);
    });
    bool same = a == b;
    double excess;
    if (same) {
      excess = dab - tol_;
    } else if (inst_.exact_metric()) {
      excess = dab == 0.0 ? 1.0 : -1.0;
    } else {
      excess = dab > 0.0 ? -1.0 : 1.0;
    }
    indiscernibles_.record(excess, [&] {
      return "a=" + a.to_string() + ", b=" + b.to_string() + ": d(a,b)=" + fmt(dab);
    });
  }

  void triple(const Element& a, const Element& b, const Element& c) {
    auto ab_c = inst_.compose(inst_.compose(a, b), c);
    auto a_bc = inst_.compose(a, inst_.compose(b, c));
    double assoc_excess = inst_.exact_metric() ? (ab_c == a_bc ? -1.0 : 1.0) : inst_.distance(ab_c, a_bc) - tol_;
    assoc_.record(assoc_excess, [&] {
      return "(a,b,c)=(" + a.to_string() + "," + b.to_string() + "," + c.to_string() + "): (ab)c=" +
             ab_c.to_string() + " != a(bc)=" + a_bc.to_string();
    });

    double dab = inst_.distance(a, b);
    double dbc = inst_.distance(b, c);
    double dac = inst_.distance(a, c);
    triangle_.record(dac - dab - dbc - tol_, [&] {
      return "(a,b,c)=(" + a.to_string() + "," + b.to_string() + "," + c.to_string() + "): d(a,c)=" + fmt(dac) +
             " > d(a,b)+d(b,c)=" + fmt(dab + dbc);
    });

    double left = inst_.distance(inst_.compose(c, a), inst_.compose(c, b));
    left_.record(std::abs(left - dab) - tol_, [&] {
      return "(a,b,c)=(" + a.to_string() + "," + b.to_string() + "," + c.to_string() + "): d(ca,cb)=" + fmt(left) +
             " != d(a,b)=" + fmt(dab);
    });
    double right = inst_.distance(inst_.compose(a, c), inst_.compose(b, c));
    right_.record(std::abs(right - dab) - tol_, [&] {
      return "(a,b,c)=(" + a.to_string() + "," + b.to_string() + "," + c.to_string() + "): d(ac,bc)=" + fmt(right) +
             " != d(a,b)=" + fmt(dab);
    });
  }

  void quad(const Element& y1, const Element& y2, const Element& z1, const Element& z2) {
    double lhs = inst_.distance(inst_.compose(y1, y2), inst_.compose(z1, z2));
    double rhs = inst_.distance(y1, z1) + inst_.distance(y2, z2);
    two_sided_.record(lhs - rhs - tol_, [&] {
      return "(y1,y2,z1,z2)=(" + y1.to_string() + "," + y2.to_string() + "," + z1.to_string() + "," +
             z2.to_string() + "): d(y1y2,z1z2)=" + fmt(lhs) + " > " + fmt(rhs);
    });
  }

  AxiomReport finish(std::string mode, double tol) {
    AxiomReport r;
    r.instance = inst_.name();
    r.mode = std::move(mode);
    r.tolerance = tol;
    for (Recorder* rec : {&assoc_, &nonneg_, &symmetry_, &indiscernibles_, &triangle_, &left_, &right_, &two_sided_}) {
      r.checks.push_back(rec->take());
    }
    return r;
  }

 private:
  const MetricSemigroup& inst_;
  double tol_;
  Recorder assoc_{axiom::associativity};
  Recorder nonneg_{axiom::nonnegativity};
  Recorder symmetry_{axiom::symmetry};
  Recorder indiscernibles_{axiom::indiscernibles};
  Recorder triangle_{axiom::triangle};
  Recorder left_{axiom::left_invariance};
  Recorder right_{axiom::right_invariance};
  Recorder two_sided_{axiom::two_sided_triangle};
};

void exhaustive_over(AxiomChecker& checker, std::span<const Element> pool) {
  double n = static_cast<double>(pool.size());
  if (n * n * n * n > kMaxExhaustiveQuads) {
    throw DomainError("exhaustive axiom check over " + std::to_string(pool.size()) +
                      " elements is too large; use sampled mode");
  }
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      checker.pair(a, b);
      for (const auto& c : pool) {
        checker.triple(a, b, c);
        for (const auto& d : pool) checker.quad(a, b, c, d);
      }
    }
  }
}

}  // namespace

std::size_t AxiomReport::total_violations() const {
  std::size_t total = 0;
  for (const auto& c : checks) total += c.violations;
  return total;
}

const AxiomCheck& AxiomReport::check(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.axiom == name) return c;
  }
  throw DomainError("no axiom named " + std::string(name));
}

AxiomReport verify_axioms(const MetricSemigroup& inst, const CheckMode& mode, double tol) {
  AxiomChecker checker(inst, tol);
  if (std::holds_alternative<Exhaustive>(mode)) {
    if (!inst.capabilities().finite) throw DomainError("exhaustive mode requires a finite instance");
    auto pool = inst.elements();
    exhaustive_over(checker, pool);
    return checker.finish("exhaustive", tol);
  }
  const auto& s = std::get<Sampled>(mode);
  if (!inst.has_sampler()) throw MissingSampler(inst.name() + " has no sampler for sampled axiom checks");
  Rng rng(derive_seed(s.seed, 0));
  for (std::size_t i = 0; i < s.count; ++i) {
    auto a = inst.sample(rng);
    auto b = inst.sample(rng);
    auto c = inst.sample(rng);
    auto d = inst.sample(rng);
    checker.pair(a, b);
    checker.pair(a, a);
    checker.triple(a, b, c);
    checker.quad(a, b, c, d);
  }
  return checker.finish("sampled(" + std::to_string(s.count) + ", seed " + std::to_string(s.seed) + ")", tol);
}

AxiomReport verify_axioms_over(const MetricSemigroup& inst, std::span<const Element> pool, double tol) {
  AxiomChecker checker(inst, tol);
  exhaustive_over(checker, pool);
  return checker.finish("pool(" + std::to_string(pool.size()) + ")", tol);
}

double telescoping_excess(const MetricSemigroup& inst, std::span<const Element> z, std::size_t k) {
  if (z.empty() || k >= z.size()) throw DomainError("telescoping bound needs z_0..z_{k+l} with l >= 1");
  Element head = z[0];
  for (std::size_t i = 1; i <= k; ++i) head = inst.compose(head, z[i]);
  Element full = head;
  double rhs = 0.0;
  for (std::size_t i = k + 1; i < z.size(); ++i) {
    full = inst.compose(full, z[i]);
    rhs += inst.magnitude(z[0], z[i]);
  }
  return inst.distance(head, full) - rhs;
}

}  // namespace msemi
