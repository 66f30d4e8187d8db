#include "msemi/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "msemi/completion.hpp"
#include "msemi/errors.hpp"

namespace msemi {

namespace {

Real value_of(double v, bool exact) { return exact ? Real::exact_from_double(v) : Real(v); }

double inf() { return std::numeric_limits<double>::infinity(); }

bool is_integral(double p) { return p >= 0 && p <= 64 && std::floor(p) == p; }

/// Tightest of several links a_i <= b_i, as (lhs, rhs, link index).
struct Link {
  Real lhs;
  Real rhs;
  std::string label;
};

Evaluation worst_link(const std::vector<Link>& links, nlohmann::json details) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < links.size(); ++i) {
    if (links[i].rhs - links[i].lhs < links[best].rhs - links[best].lhs) best = i;
  }
  details["tightest_link"] = links[best].label;
  return {links[best].lhs, links[best].rhs, std::nullopt, std::move(details)};
}

}  // namespace

unsigned HJParameters::total() const {
  unsigned s = 0;
  for (unsigned v : n) s += v;
  return s;
}

void HJParameters::validate(std::size_t length) const {
  if (n.empty()) throw DomainError("hj needs k >= 1");
  if (n.size() != t.size()) throw DomainError("hj needs as many t_i as n_i");
  for (unsigned v : n) {
    if (v == 0) throw DomainError("hj needs every n_i >= 1");
  }
  for (const auto& v : t) {
    if (v.sign() < 0) throw DomainError("hj needs every t_i >= 0");
  }
  if (s.sign() < 0) throw DomainError("hj needs s >= 0");
  if (total() > length + 1) {
    throw DomainError("hj needs sum n_i = " + std::to_string(total()) + " <= n + 1 = " + std::to_string(length + 1));
  }
}

Real HJParameters::threshold() const {
  Real T = Real(static_cast<int>(2 * n[0] - 1)) * t[0];
  for (std::size_t i = 1; i < n.size(); ++i) T += Real(static_cast<int>(2 * n[i])) * t[i];
  T += Real(static_cast<int>(total()) - 1) * s;
  return T;
}

nlohmann::json HJParameters::to_json() const {
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& v : t) ts.push_back(json_real(v));
  return {{"k", n.size()}, {"n", n}, {"t", ts}, {"s", json_real(s)}};
}

std::vector<std::size_t> hj_index_set(const HJParameters& params, const std::vector<Real>& cdf_at_t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < params.k(); ++i) {
    unsigned e = params.n[i] - (i == 0 ? 1 : 0);
    if (pow(cdf_at_t[i], e) <= Real(1) / factorial(params.n[i])) out.push_back(i);
  }
  return out;
}

InequalityReport check_hj(const LawContext& ctx, const HJParameters& params) {
  params.validate(ctx.sequence().size());
  const auto& U = ctx.U();
  const auto& M = ctx.M();
  const Real T = params.threshold();
  Inputs in;
  Real p_lhs = U.tail(T.to_double());
  in.add(p_lhs, U.tail_standard_error(p_lhs));
  Real p_m = M.tail(params.s.to_double());
  in.add(p_m, M.tail_standard_error(p_m));
  for (const auto& ti : params.t) {
    Real q = U.cdf(ti.to_double());
    in.add(q, U.tail_standard_error(q));
  }
  const std::size_t k = params.k();
  Formula f = [&params, k, T](const std::vector<Real>& v) {
    std::vector<Real> q(v.begin() + 2, v.end());
    auto idx = hj_index_set(params, q);
    std::vector<bool> in_i0(k, false);
    for (auto i : idx) in_i0[i] = true;
    Evaluation e;
    e.lhs = v[0];
    Real prod(1);
    if (!in_i0[0]) prod *= q[0];
    for (std::size_t i = 0; i < k; ++i) {
      Real tail = Real(1) - q[i];
      if (in_i0[i]) {
        prod *= pow(tail, params.n[i]);
      } else if (q[i].is_zero()) {
        e.degenerate = "P(U_n <= t_" + std::to_string(i + 1) + ") = 0 outside I0";
        e.rhs = Real(inf());
        return e;
      } else {
        prod *= pow(tail / q[i], params.n[i]) / factorial(params.n[i]);
      }
    }
    e.rhs = v[1] + prod;
    nlohmann::json i0 = nlohmann::json::array();
    for (auto i : idx) i0.push_back(i + 1);
    e.details = {{"I0", i0}, {"threshold", json_real(T)}};
    return e;
  };
  return evaluate("hj", params.to_json(), in, f, ctx.engine_info(), ctx.rational());
}

InequalityReport check_hj_simple(const LawContext& ctx, unsigned K, const Real& t) {
  if (K == 0) throw DomainError("hj_simple needs K >= 1");
  if (t.sign() <= 0) throw DomainError("hj_simple needs t > 0");
  const auto& U = ctx.U();
  const auto& M = ctx.M();
  Real T = Real(static_cast<int>(3 * K - 1)) * t;
  Inputs in;
  Real a = U.tail(T.to_double());
  Real b = U.tail(t.to_double());
  Real c = M.tail(t.to_double());
  in.add(a, U.tail_standard_error(a));
  in.add(b, U.tail_standard_error(b));
  in.add(c, M.tail_standard_error(c));
  Formula f = [K](const std::vector<Real>& v) {
    Evaluation e;
    e.lhs = v[0];
    Real below = Real(1) - v[1];
    if (below.is_zero()) {
      e.degenerate = "P(U_n <= t) = 0";
      e.rhs = Real(inf());
      return e;
    }
    e.rhs = pow(v[1] / below, K) / factorial(K) + v[2];
    return e;
  };
  nlohmann::json params{{"K", K}, {"t", json_real(t)}};
  return evaluate("hj_simple", params, in, f, ctx.engine_info(), ctx.rational());
}

std::pair<InequalityReport, InequalityReport> check_mogulskii(const LawContext& ctx, std::size_t m, const Real& a,
                                                              const Real& b) {
  const auto& seq = ctx.sequence();
  const std::size_t n = seq.size();
  if (m < 1 || m > n) throw DomainError("mogulskii needs 1 <= m <= n");
  if (a.sign() < 0 || b.sign() < 0) throw DomainError("mogulskii needs a, b >= 0");
  const MetricSemigroup* g = &seq.instance();
  std::vector<PathFunctional> fns;
  fns.push_back([m](const PathTrace& t) { return *std::min_element(t.D.begin() + (m - 1), t.D.end()); });
  fns.push_back([m](const PathTrace& t) { return *std::max_element(t.D.begin() + (m - 1), t.D.end()); });
  fns.push_back(functional::d_n);
  for (std::size_t k = m; k < n; ++k) {
    fns.push_back([g, k](const PathTrace& t) { return g->distance(t.S[k - 1], t.S.back()); });
  }
  auto laws = ctx.laws_of(fns);
  const double bd = b.to_double();
  std::vector<Real> factors;
  std::vector<double> factor_se;
  for (std::size_t i = 3; i < laws.size(); ++i) {
    Real p = laws[i].cdf(bd);
    factors.push_back(p);
    factor_se.push_back(laws[i].tail_standard_error(p));
  }
  nlohmann::json params{{"m", m}, {"a", json_real(a)}, {"b", json_real(b)}};

  auto build = [&](Real first, double first_se, Real last, double last_se) {
    Inputs in;
    in.add(first, first_se);
    for (std::size_t i = 0; i < factors.size(); ++i) in.add(factors[i], factor_se[i]);
    in.add(last, last_se);
    return in;
  };
  Formula f = [](const std::vector<Real>& v) {
    Real fmin(1);  // the k = n factor is P(0 <= b) = 1
    for (std::size_t i = 1; i + 1 < v.size(); ++i) fmin = min(fmin, v[i]);
    Evaluation e;
    e.lhs = v.front() * fmin;
    e.rhs = v.back();
    e.details = {{"min_factor", json_real(fmin)}};
    return e;
  };

  Real p1 = laws[0].cdf(a.to_double());
  Real r1 = laws[2].cdf((a + b).to_double());
  auto rep1 = evaluate("mogulskii_min", params, build(p1, laws[0].tail_standard_error(p1), r1,
                                                      laws[2].tail_standard_error(r1)),
                       f, ctx.engine_info(), ctx.rational());
  Real p2 = laws[1].tail_inclusive(a.to_double());
  Real r2 = laws[2].tail_inclusive((a - b).to_double());
  auto rep2 = evaluate("mogulskii_max", params, build(p2, laws[1].tail_standard_error(p2), r2,
                                                      laws[2].tail_standard_error(r2)),
                       f, ctx.engine_info(), ctx.rational());
  return {std::move(rep1), std::move(rep2)};
}

InequalityReport check_ell_sandwich(const LawContext& ctx, const Real& t, double tol) {
  if (t.sign() <= 0 || t >= Real(1)) throw DomainError("ell_sandwich needs t in (0, 1)");
  const bool exact = ctx.rational();
  const auto& Y = ctx.Y();
  double l2t = ell_at(Y, Real(2) * t);
  double lq = ell_at(Y, t / (Real(1) - t));
  double ms = rearrangement_at(ctx.M(), t);
  double lt = ell_at(Y, t);
  nlohmann::json details{{"l(2t)", l2t}, {"l(t/(1-t))", lq}, {"M*(t)", ms}, {"l(t)", lt}};
  std::vector<Link> links{{value_of(l2t, exact), value_of(lq, exact), "l(2t) <= l(t/(1-t))"},
                          {value_of(lq, exact), value_of(ms, exact), "l(t/(1-t)) <= M*(t)"},
                          {value_of(ms, exact), value_of(lt, exact), "M*(t) <= l(t)"}};
  return make_report("ell_sandwich", {{"t", json_real(t)}}, worst_link(links, details), ctx.engine_info(), exact,
                     tol);
}

InequalityReport check_moment_sandwich(const LawContext& ctx, const Real& t, double p, double tol) {
  if (t.sign() <= 0) throw DomainError("moment_sandwich needs t > 0");
  if (!(p > 0)) throw DomainError("moment_sandwich needs p > 0");
  const bool exact = ctx.rational();
  const auto& Y = ctx.Y();
  double l = ell_at(Y, t);
  Inputs in;
  in.add(moment_value(ctx.M(), p), ctx.M().moment_standard_error(p));
  in.add(real_pow(value_of(l, exact), p));
  in.add(psi(Y, t, p));
  Formula f = [t, l](const std::vector<Real>& v) {
    const Real& em = v[0];
    const Real& lp = v[1];
    const Real& ps = v[2];
    Real lower = (t * lp + ps) / (Real(1) + t);
    Real upper = lp + ps;
    nlohmann::json details{{"l(t)", l}, {"psi", json_real(ps)}, {"E[M^p]", json_real(em)},
                           {"lower", json_real(lower)}, {"upper", json_real(upper)}};
    return worst_link({{lower, em, "lower <= E[M^p]"}, {em, upper, "E[M^p] <= upper"}}, details);
  };
  return evaluate("moment_sandwich", {{"t", json_real(t)}, {"p", p}}, in, f, ctx.engine_info(), exact, tol);
}

RatioReport check_quantile_lemma(const LawContext& ctx, const Real& t, const Real& s) {
  if (t.sign() < 0 || t > s || s > Real::ratio(1, 2)) throw DomainError("quantile_lemma needs 0 <= t <= s <= 1/2");
  nlohmann::json params{{"t", json_real(t)}, {"s", json_real(s)}};
  if (t.is_zero()) {
    RatioReport r = make_ratio("quantile_lemma", params, 0, 0);
    r.degenerate = "t = 0 leaves the ratio undefined";
    return r;
  }
  const double td = t.to_double();
  const double sd = s.to_double();
  double u_t = rearrangement_at(ctx.U(), t);
  double u_s = rearrangement_at(ctx.U(), s);
  double m_half = rearrangement_at(ctx.M(), t / Real(2));
  double lg = std::max(std::log(1 / sd), std::log(std::log(4 / td)));
  RatioReport r = make_ratio("quantile_lemma", params, u_t * lg, std::log(1 / td) * (u_s + m_half));
  r.details = {{"U*(t)", u_t}, {"U*(s)", u_s}, {"M*(t/2)", m_half}};
  return r;
}

LawContext monoid_context(const LawContext& ctx) {
  const auto& seq = ctx.sequence();
  auto id = seq.instance().identity();
  if (id && seq.z0() == *id && seq.z1() == *id) return ctx;
  auto completed = seq.completed();
  Element unit = *completed.instance().identity();
  return LawContext(completed.with_basepoints(unit, unit), ctx.engine());
}

IndependentSequence truncated_sequence(const IndependentSequence& monoid_seq, const Real& t, bool upper) {
  std::vector<Variable> vars;
  vars.reserve(monoid_seq.size());
  for (const auto& v : monoid_seq.variables()) {
    vars.push_back(upper ? truncate_upper(v, t, monoid_seq.instance_ptr()) : truncate(v, t, monoid_seq.instance_ptr()));
  }
  return monoid_seq.with_variables(std::move(vars));
}

namespace {

double ell_moment_root(const std::vector<ScalarLaw>& Y, double p) { return ell_law(Y).moment_root(p); }

/// Law of U for the truncation of a monoid sequence at l(e^{-p}/8).
ScalarLaw truncated_u_law(const LawContext& mc, double p) {
  Real cut(ell_at(mc.Y(), Real(std::exp(-p) / 8)));
  auto tseq = truncated_sequence(mc.sequence(), cut, false);
  return law_of_Un(tseq, mc.engine());
}

}  // namespace

std::pair<RatioReport, RatioReport> check_tbounds(const LawContext& ctx, double p) {
  if (!(p > 0)) throw DomainError("tbounds needs p > 0");
  LawContext mc = monoid_context(ctx);
  const double eu = mc.U().moment_root(p);
  const double el = ell_moment_root(mc.Y(), p);
  const Real t4(std::exp(-p) / 4);
  const double u_star = rearrangement_at(mc.U(), t4);
  ScalarLaw u_prime = truncated_u_law(mc, p);
  const double up_star = rearrangement_at(u_prime, t4);
  nlohmann::json params{{"p", p}};
  nlohmann::json details{{"E[U^p]^(1/p)", eu}, {"E[l^p]^(1/p)", el}, {"U*(e^-p/4)", u_star},
                         {"U'*(e^-p/4)", up_star}};
  RatioReport r1 = make_ratio("tbounds_ratio1", params, eu, u_star + el, 1.0, true);
  RatioReport r2 = make_ratio("tbounds_ratio2", params, eu, up_star + el, 1.0, true);
  r1.details = details;
  r2.details = details;
  return {r1, r2};
}

InequalityReport check_truncated_quantile(const LawContext& ctx, double p, const Real& eta) {
  if (!(p > 0)) throw DomainError("truncated_quantile needs p > 0");
  const double e8 = std::exp(-p) / 8;
  const double ed = eta.to_double();
  if (ed < e8 || eta > Real(1)) throw DomainError("truncated_quantile needs eta in [e^-p/8, 1]");
  LawContext mc = monoid_context(ctx);
  ScalarLaw u_prime = truncated_u_law(mc, p);
  double lhs = rearrangement_at(u_prime, eta);
  double rhs = rearrangement_at(mc.U(), Real(std::max(0.0, ed - e8)));
  const bool exact = mc.rational();
  Evaluation e{value_of(lhs, exact), value_of(rhs, exact), std::nullopt,
               {{"cut", ell_at(mc.Y(), Real(e8))}}};
  return make_report("truncated_quantile", {{"p", p}, {"eta", json_real(eta)}}, std::move(e), mc.engine_info(),
                     exact);
}

InequalityReport check_hj_moment_claim(const LawContext& ctx, double p, double tol) {
  if (!(p > 0)) throw DomainError("hj_moment needs p > 0");
  const bool exact = ctx.rational();
  const bool integral = is_integral(p);
  Real scale = integral ? pow(Real(2), static_cast<unsigned>(1 + 2 * p)) : Real(std::pow(2.0, 1 + 2 * p));
  Real level = integral ? Real(1) / scale : Real(std::pow(2.0, -1 - 2 * p));
  double u_star = rearrangement_at(ctx.U(), level);
  Inputs in;
  in.add(moment_value(ctx.U(), p), ctx.U().moment_standard_error(p));
  in.add(moment_value(ctx.M(), p), ctx.M().moment_standard_error(p));
  in.add(real_pow(value_of(u_star, exact), p));
  Formula f = [scale, u_star](const std::vector<Real>& v) {
    Evaluation e;
    e.lhs = v[0];
    e.rhs = scale * (v[1] + v[2]);
    e.details = {{"U*(2^(-1-2p))", u_star}};
    return e;
  };
  return evaluate("hj_moment", {{"p", p}}, in, f, ctx.engine_info(), exact, tol);
}

InequalityReport check_truncated_moment(const LawContext& ctx, double r, double p, double tol) {
  if (!(r > 0 && r < 1)) throw DomainError("truncated_moment needs r in (0, 1)");
  if (!(p > 0)) throw DomainError("truncated_moment needs p > 0");
  LawContext mc = monoid_context(ctx);
  const double cut = ell_at(mc.Y(), Real(r));
  auto useq = truncated_sequence(mc.sequence(), Real(cut), true);
  ScalarLaw u2 = law_of_Un(useq, mc.engine());
  const double el = ell_moment_root(mc.Y(), p);
  const double lhs = u2.moment_root(p);
  const double rhs = 2 * std::exp(std::pow(2.0, p) * r / p) * el;
  Evaluation e{Real(lhs), Real(rhs), std::nullopt, {{"cut", cut}, {"E[l^p]^(1/p)", el}}};
  return make_report("truncated_moment", {{"r", r}, {"p", p}}, std::move(e), mc.engine_info(), false, tol);
}

double log16() { return std::log(16.0); }

TupqParameters tupq_defaults(double p, double q, double p0) { return {p0, p, q, log16()}; }

void TupqParameters::validate() const {
  if (!(p0 > 0)) throw DomainError("tupq needs p0 > 0");
  if (!(p >= p0)) throw DomainError("tupq needs p >= p0");
  if (!(q >= p)) throw DomainError("tupq needs q >= p");
  if (!(eps > -q) || eps > log16() + 1e-15) throw DomainError("tupq needs eps in (-q, log 16]");
}

bool TupqParameters::second_form_applies() const { return eps >= std::min(1.0, std::numbers::e - p0); }

double TupqParameters::factor() const { return q / std::max(p, std::log(eps + q)); }

nlohmann::json TupqParameters::to_json() const { return {{"p0", p0}, {"p", p}, {"q", q}, {"eps", eps}}; }

double c_prime(double c, double p0, double eps) {
  return c * (std::pow(8.0, 1 / p0) * std::numbers::e + std::max(1.0, std::log(eps + p0) / p0));
}

namespace {

struct TupqTerms {
  double euq, eup, m_star, emq;
};

TupqTerms tupq_terms(const LawContext& ctx, const TupqParameters& prm) {
  return {ctx.U().moment_root(prm.q), ctx.U().moment_root(prm.p),
          rearrangement_at(ctx.M(), Real(std::exp(-prm.q) / 8)), ctx.M().moment_root(prm.q)};
}

nlohmann::json terms_json(const TupqTerms& t) {
  return {{"E[U^q]^(1/q)", t.euq}, {"E[U^p]^(1/p)", t.eup}, {"M*(e^-q/8)", t.m_star}, {"E[M^q]^(1/q)", t.emq}};
}

}  // namespace

RatioReport required_c(const LawContext& ctx, const TupqParameters& params) {
  params.validate();
  auto t = tupq_terms(ctx, params);
  RatioReport r = make_ratio("tupq_required_c", params.to_json(), t.euq,
                             params.factor() * (t.eup + t.m_star) + t.emq, 0.0, true);
  r.details = terms_json(t);
  return r;
}

std::pair<InequalityReport, std::optional<InequalityReport>> check_tupq(const LawContext& ctx,
                                                                        const TupqParameters& params, double c,
                                                                        double c_prime_value, double tol) {
  params.validate();
  auto t = tupq_terms(ctx, params);
  const double k = params.factor();
  nlohmann::json prm = params.to_json();
  prm["c"] = c;
  prm["c_prime"] = c_prime_value;
  Evaluation e1{Real(t.euq), Real(c * k * (t.eup + t.m_star) + c * t.emq), std::nullopt, terms_json(t)};
  auto first = make_report("tupq_first", prm, std::move(e1), ctx.engine_info(), false, tol);
  std::optional<InequalityReport> second;
  if (params.second_form_applies()) {
    Evaluation e2{Real(t.euq), Real(c_prime_value * k * (t.eup + t.emq)), std::nullopt, terms_json(t)};
    second = make_report("tupq_second", prm, std::move(e2), ctx.engine_info(), false, tol);
  }
  return {std::move(first), std::move(second)};
}

InequalityReport check_rearrangement_transfer(const std::vector<TransferTuple>& tuples, const ScalarLaw& law_x,
                                              const ScalarLaw& law_y, const Real& t) {
  TransferResult res = rearrangement_transfer(tuples, law_x, law_y, t);
  nlohmann::json tp = nlohmann::json::array();
  for (const auto& x : tuples) tp.push_back({x.alpha, x.beta, x.gamma, x.delta});
  Evaluation e{Real(res.lhs), Real(res.rhs), std::nullopt,
               {{"form", res.all_tuples_hold ? "min" : "max"}, {"grid_points", res.grid.size()}}};
  if (!res.hypothesis_holds) {
    e.degenerate = "hypothesis fails on the grid; conclusion untested";
    e.details["verdict"] = "untested";
  }
  return make_report("rearrangement_transfer", {{"t", json_real(t)}, {"tuples", tp}}, std::move(e), EngineInfo{},
                     false, 1e-12);
}

}  // namespace msemi
