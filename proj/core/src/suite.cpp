#include "msemi/suite.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "msemi/constants.hpp"
#include "msemi/errors.hpp"

namespace msemi {

const std::vector<std::string>& checker_names() {
  static const std::vector<std::string> names{"hj",       "hj_simple",          "mogulskii", "ell_sandwich",
                                              "moment_sandwich", "quantile_lemma", "tbounds",   "truncated_quantile",
                                              "hj_moment", "truncated_moment",  "tupq"};
  return names;
}

std::string canonical_checker(const std::string& name) {
  static const std::map<std::string, std::string> aliases{{"ell", "ell_sandwich"},
                                                          {"moment", "moment_sandwich"},
                                                          {"quantile", "quantile_lemma"},
                                                          {"ehm", "truncated_quantile"},
                                                          {"hjmoment", "hj_moment"},
                                                          {"trunc", "truncated_moment"},
                                                          {"eunr", "hj_simple"}};
  if (auto it = aliases.find(name); it != aliases.end()) return it->second;
  const auto& names = checker_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) return name;
  throw ConfigError("unknown checker '" + name + "'");
}

void SuiteResult::append(SuiteResult other) {
  for (auto& r : other.reports) reports.push_back(std::move(r));
  for (auto& r : other.ratios) ratios.push_back(std::move(r));
}

std::size_t SuiteResult::violations() const {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const InequalityReport& r) { return !r.passes(); }));
}

std::vector<Real> quantile_grid(const ScalarLaw& law, unsigned levels) {
  std::vector<double> values;
  for (unsigned i = 1; i <= levels; ++i) {
    double v = rearrangement_at(law, Real::ratio(2 * i - 1, 2 * static_cast<std::int64_t>(levels)));
    if (v > 0 && std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  std::vector<Real> out;
  for (double v : values) out.push_back(Real::exact_from_double(v));
  return out;
}

std::vector<Real> threshold_candidates(const ScalarLaw& law) {
  std::vector<Real> out{Real(0)};
  auto support = law.support();
  for (std::size_t i = 0; i < support.size(); ++i) {
    Real v = Real::exact_from_double(support[i]);
    if (i > 0) out.push_back((Real::exact_from_double(support[i - 1]) + v) / Real(2));
    if (v.sign() > 0) out.push_back(v);
  }
  if (!support.empty()) out.push_back(Real::exact_from_double(support.back()) + Real(1));
  return out;
}

std::vector<Real> default_t_grid() {
  return {Real::ratio(1, 20), Real::ratio(1, 10), Real::ratio(1, 4), Real::ratio(2, 5), Real::ratio(49, 100)};
}

std::vector<double> default_p_grid() { return {0.5, 1, 2}; }

std::vector<double> default_r_grid() { return {0.3, 0.9}; }

std::vector<Real> default_eta_grid() {
  return {Real::ratio(1, 8), Real::ratio(1, 4), Real::ratio(1, 2), Real::ratio(3, 4), Real(1)};
}

std::vector<HJParameters> default_hj_grid(const LawContext& ctx) {
  const auto ts = threshold_candidates(ctx.U());
  const auto ss = threshold_candidates(ctx.M());
  const std::size_t n = ctx.sequence().size();
  std::vector<HJParameters> out;
  for (unsigned n1 = 1; n1 <= std::min<std::size_t>(2, n + 1); ++n1) {
    for (const auto& t : ts) {
      for (const auto& s : ss) out.push_back({{n1}, {t}, s});
    }
  }
  if (n >= 1) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
      for (std::size_t j = i; j < ts.size(); ++j) out.push_back({{1, 1}, {ts[i], ts[j]}, Real(0)});
    }
  }
  return out;
}

HJParameters random_hj_parameters(const LawContext& ctx, Rng& rng) {
  const auto ts = threshold_candidates(ctx.U());
  const auto ss = threshold_candidates(ctx.M());
  const std::size_t budget = ctx.sequence().size() + 1;
  const auto k = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(std::min<std::size_t>(3, budget))));
  HJParameters p;
  std::size_t left = budget;
  for (std::size_t i = 0; i < k; ++i) {
    // Keep at least one unit for every later n_i.
    const auto hi = static_cast<std::int64_t>(left - (k - i - 1));
    const auto ni = static_cast<unsigned>(uniform_int(rng, 1, hi));
    left -= ni;
    p.n.push_back(ni);
    p.t.push_back(ts[uniform_below(rng, ts.size())]);
  }
  p.s = ss[uniform_below(rng, ss.size())];
  return p;
}

std::vector<MogulskiiPoint> default_mogulskii_grid(const LawContext& ctx) {
  const auto vs = threshold_candidates(ctx.U());
  std::vector<MogulskiiPoint> out;
  for (std::size_t m = 1; m <= ctx.sequence().size(); ++m) {
    for (const auto& a : vs) {
      for (const auto& b : vs) out.push_back({m, a, b});
    }
  }
  return out;
}

MogulskiiPoint random_mogulskii_point(const LawContext& ctx, Rng& rng) {
  const auto vs = threshold_candidates(ctx.U());
  const auto m = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(ctx.sequence().size())));
  const Real& a = vs[uniform_below(rng, vs.size())];
  const Real& b = vs[uniform_below(rng, vs.size())];
  return {m, a, b};
}

SuiteResult run_default_grid(const LawContext& ctx, const std::string& checker, double tol) {
  const std::string name = canonical_checker(checker);
  SuiteResult out;
  if (name == "hj") {
    for (const auto& p : default_hj_grid(ctx)) out.reports.push_back(check_hj(ctx, p));
  } else if (name == "hj_simple") {
    for (unsigned K = 1; K <= 4; ++K) {
      for (const auto& t : quantile_grid(ctx.U())) out.reports.push_back(check_hj_simple(ctx, K, t));
    }
  } else if (name == "mogulskii") {
    for (const auto& pt : default_mogulskii_grid(ctx)) {
      auto [lo, hi] = check_mogulskii(ctx, pt.m, pt.a, pt.b);
      out.reports.push_back(std::move(lo));
      out.reports.push_back(std::move(hi));
    }
  } else if (name == "ell_sandwich") {
    for (const auto& t : default_t_grid()) out.reports.push_back(check_ell_sandwich(ctx, t, tol));
  } else if (name == "moment_sandwich") {
    for (double p : default_p_grid()) {
      for (const auto& t : default_t_grid()) out.reports.push_back(check_moment_sandwich(ctx, t, p, tol));
    }
  } else if (name == "quantile_lemma") {
    for (const auto& [t, s] : default_c1_grid()) out.ratios.push_back(check_quantile_lemma(ctx, t, s));
  } else if (name == "tbounds") {
    for (double p : default_p_grid()) {
      auto [r1, r2] = check_tbounds(ctx, p);
      out.ratios.push_back(std::move(r1));
      out.ratios.push_back(std::move(r2));
    }
  } else if (name == "truncated_quantile") {
    for (double p : default_p_grid()) {
      for (const auto& eta : default_eta_grid()) out.reports.push_back(check_truncated_quantile(ctx, p, eta));
    }
  } else if (name == "hj_moment") {
    for (double p : default_p_grid()) out.reports.push_back(check_hj_moment_claim(ctx, p, tol));
  } else if (name == "truncated_moment") {
    for (double r : default_r_grid()) {
      for (double p : default_p_grid()) out.reports.push_back(check_truncated_moment(ctx, r, p, tol));
    }
  } else if (name == "tupq") {
    for (const auto& pq : default_pq_grid()) {
      auto prm = tupq_defaults(pq.p, pq.q);
      RatioReport need = required_c(ctx, prm);
      const double c = need.ratio;
      out.ratios.push_back(std::move(need));
      if (!std::isfinite(c)) continue;
      auto [first, second] = check_tupq(ctx, prm, c, c_prime(c, prm.p0, prm.eps), tol);
      out.reports.push_back(std::move(first));
      if (second) out.reports.push_back(std::move(*second));
    }
  }
  return out;
}

}  // namespace msemi
