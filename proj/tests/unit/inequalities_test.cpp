#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "msemi/errors.hpp"
#include "msemi/inequalities.hpp"
#include "msemi/suite.hpp"
#include "support.hpp"

namespace msemi {
namespace {

using test::rademacher;

const Real half = Real::ratio(1, 2);

Real exact(const InequalityReport& r, const char* field) { return Real::parse(r.to_json()["exact"][field].get<std::string>()); }

double detail(const InequalityReport& r, const char* key) {
  const auto& v = r.details.at(key);
  return v.is_string() ? Real::parse(v.get<std::string>()).to_double() : v.get<double>();
}

IndependentSequence constant_magnitudes(std::initializer_list<int> values) {
  nlohmann::json vars = nlohmann::json::array();
  for (int v : values) vars.push_back({{"atoms", {{v, "1"}}}});
  return sequence_from_json({{"instance", "int"}, {"variables", vars}});
}

TEST(HJ, SingleBlockIsTautological) {
  LawContext ctx(rademacher(2));
  for (Real t : {Real(0), half, Real(1), Real(2)}) {
    for (Real s : {Real(0), half, Real(1)}) {
      auto r = check_hj(ctx, {{1}, {t}, s});
      EXPECT_EQ(r.certification, Certification::rational);
      EXPECT_EQ(r.slack, ctx.M().tail(s.to_double()));
    }
  }
}

TEST(HJ, RademacherTwoBlocksOfTwo) {
  LawContext ctx(rademacher(2));
  auto r = check_hj(ctx, {{2}, {Real(1)}, Real(1)});
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, Real(0));
  EXPECT_EQ(r.rhs, Real::ratio(1, 4));
  EXPECT_EQ(exact(r, "slack"), Real::ratio(1, 4));
  EXPECT_EQ(r.details.at("I0"), nlohmann::json::array({1}));
}

TEST(HJ, RademacherThreeTwoBlocks) {
  LawContext ctx(rademacher(3));
  auto r = check_hj(ctx, {{2, 2}, {Real(1), Real(1)}, Real(1)});
  EXPECT_EQ(r.certification, Certification::rational);
  EXPECT_GE(r.slack.sign(), 0);
  EXPECT_TRUE(r.holds);
}

TEST(HJ, ValidatesParameters) {
  LawContext ctx(rademacher(2));
  EXPECT_THROW(check_hj(ctx, {{2, 2}, {Real(1), Real(1)}, Real(1)}), DomainError);
  EXPECT_THROW(check_hj(ctx, {{}, {}, Real(1)}), DomainError);
  EXPECT_THROW(check_hj(ctx, {{0}, {Real(1)}, Real(1)}), DomainError);
  EXPECT_THROW(check_hj(ctx, {{1}, {Real(-1)}, Real(1)}), DomainError);
}

TEST(HJ, IndexSetRule) {
  HJParameters p{{1, 2, 3}, {Real(1), Real(1), Real(1)}, Real(0)};
  // First block has exponent n_1 - 1 = 0, so it is always in I0.
  auto idx = hj_index_set(p, {half, half, half});
  EXPECT_EQ(idx, (std::vector<std::size_t>{0, 1, 2}));
  auto idx2 = hj_index_set(p, {Real(1), Real::ratio(3, 4), Real::ratio(9, 10)});
  EXPECT_EQ(idx2, (std::vector<std::size_t>{0}));
}

TEST(HJSimple, RademacherExamples) {
  LawContext two(rademacher(2));
  auto a = check_hj_simple(two, 1, Real(1));
  EXPECT_EQ(a.lhs, Real(0));
  EXPECT_EQ(a.rhs, Real(1));
  LawContext three(rademacher(3));
  auto b = check_hj_simple(three, 2, Real(1));
  EXPECT_EQ(b.lhs, Real(0));
  EXPECT_EQ(b.rhs, half);
}

TEST(HJSimple, LargeThresholdHasZeroLhs) {
  LawContext ctx(rademacher(3));
  auto r = check_hj_simple(ctx, 3, Real(5));
  EXPECT_EQ(r.lhs, Real(0));
  EXPECT_TRUE(r.holds);
}

TEST(HJSimple, EmptyLowerTailIsDegenerate) {
  LawContext ctx(rademacher(2));
  auto r = check_hj_simple(ctx, 1, half);
  ASSERT_TRUE(r.degenerate.has_value());
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(std::isinf(r.rhs.to_double()));
  EXPECT_THROW(check_hj_simple(ctx, 1, Real(0)), DomainError);
}

TEST(Mogulskii, RademacherEqualities) {
  LawContext ctx(rademacher(2));
  auto [lo, hi] = check_mogulskii(ctx, 1, Real(1), Real(1));
  EXPECT_EQ(lo.lhs, Real(1));
  EXPECT_EQ(lo.rhs, Real(1));
  EXPECT_EQ(lo.slack, Real(0));
  auto [lo2, hi2] = check_mogulskii(ctx, 1, Real(2), Real(1));
  EXPECT_EQ(hi2.lhs, half);
  EXPECT_EQ(hi2.rhs, half);
  EXPECT_TRUE(lo2.holds);
}

TEST(Mogulskii, NegativeShiftHasUnitRhs) {
  LawContext ctx(rademacher(3));
  auto [lo, hi] = check_mogulskii(ctx, 2, Real(1), Real(2));
  EXPECT_EQ(hi.rhs, Real(1));
  EXPECT_TRUE(hi.holds);
  EXPECT_THROW(check_mogulskii(ctx, 0, Real(1), Real(1)), DomainError);
  EXPECT_THROW(check_mogulskii(ctx, 4, Real(1), Real(1)), DomainError);
}

TEST(EllSandwich, Examples) {
  LawContext one(constant_magnitudes({1}));
  auto r = check_ell_sandwich(one, Real::ratio(2, 5));
  EXPECT_EQ(r.slack.to_double(), 0.0);
  for (const char* key : {"l(2t)", "l(t/(1-t))", "M*(t)", "l(t)"}) EXPECT_EQ(r.details.at(key), 1.0);

  LawContext two(constant_magnitudes({1, 2}));
  auto a = check_ell_sandwich(two, Real::ratio(2, 5));
  for (const char* key : {"l(2t)", "l(t/(1-t))", "M*(t)", "l(t)"}) EXPECT_EQ(a.details.at(key), 2.0);
  auto b = check_ell_sandwich(two, Real::ratio(3, 5));
  EXPECT_EQ(b.details.at("l(2t)"), 1.0);
  EXPECT_EQ(b.details.at("l(t/(1-t))"), 1.0);
  EXPECT_EQ(b.details.at("M*(t)"), 2.0);
  EXPECT_EQ(b.details.at("l(t)"), 2.0);
  EXPECT_TRUE(b.holds);
  EXPECT_THROW(check_ell_sandwich(two, Real(1)), DomainError);
}

TEST(MomentSandwich, Examples) {
  LawContext one(constant_magnitudes({1}));
  auto r = check_moment_sandwich(one, half, 1);
  EXPECT_NEAR(detail(r, "lower"), 1.0 / 3, 1e-15);
  EXPECT_NEAR(detail(r, "upper"), 1.0, 1e-15);
  EXPECT_EQ(r.slack, Real(0));

  auto seq = test::seq_from(R"({"instance": "int", "variables": [{"atoms": [[1, "1/2"], [3, "1/2"]]}]})");
  LawContext u13(seq);
  auto s = check_moment_sandwich(u13, Real::ratio(3, 5), 1);
  EXPECT_NEAR(detail(s, "lower"), 1.0, 1e-15);
  EXPECT_NEAR(detail(s, "E[M^p]"), 2.0, 1e-15);
  EXPECT_NEAR(detail(s, "upper"), 2.0, 1e-15);

  LawContext zero(constant_magnitudes({0}));
  auto z = check_moment_sandwich(zero, half, 2);
  EXPECT_EQ(z.lhs, Real(0));
  EXPECT_EQ(z.rhs, Real(0));
  EXPECT_TRUE(z.holds);
}

TEST(QuantileLemma, RademacherPoint) {
  LawContext ctx(rademacher(2));
  auto r = check_quantile_lemma(ctx, Real::ratio(1, 10), half);
  EXPECT_EQ(r.details.at("U*(t)"), 2.0);
  EXPECT_EQ(r.details.at("U*(s)"), 1.0);
  EXPECT_EQ(r.details.at("M*(t/2)"), 1.0);
  const double want = 2 * std::max(std::log(2.0), std::log(std::log(40.0))) / (std::log(10.0) * 2);
  EXPECT_NEAR(r.ratio, want, 1e-12);
  EXPECT_NEAR(r.ratio, 0.567, 1e-3);
}

TEST(QuantileLemma, CollapsedAndDeterministic) {
  LawContext ctx(rademacher(3));
  auto r = check_quantile_lemma(ctx, Real::ratio(1, 4), Real::ratio(1, 4));
  EXPECT_TRUE(std::isfinite(r.ratio));
  LawContext pm(test::point_steps(3, 1));
  const Real t = Real::ratio(1, 20);
  auto q = check_quantile_lemma(pm, t, Real::ratio(1, 5));
  const double bound = std::max(std::log(5.0), std::log(std::log(80.0))) / std::log(20.0);
  EXPECT_LE(q.ratio, bound + 1e-12);
  EXPECT_TRUE(check_quantile_lemma(pm, Real(0), half).degenerate.has_value());
  EXPECT_THROW(check_quantile_lemma(pm, half, Real::ratio(1, 4)), DomainError);
}

TEST(TBounds, RademacherAndPointMass) {
  LawContext ctx(rademacher(2));
  auto [r1, r2] = check_tbounds(ctx, 1);
  EXPECT_DOUBLE_EQ(r1.ratio, 0.5);
  EXPECT_DOUBLE_EQ(r2.ratio, r1.ratio);
  LawContext pm(test::point_steps(1, 1));
  EXPECT_DOUBLE_EQ(check_tbounds(pm, 1).first.ratio, 0.5);
}

TEST(TBounds, ZeroWalkIsDegenerate) {
  LawContext pm(test::point_steps(2, 0));
  auto [r1, r2] = check_tbounds(pm, 1);
  EXPECT_EQ(r1.ratio, 1.0);
  EXPECT_TRUE(r1.degenerate.has_value());
}

TEST(TruncatedQuantile, Examples) {
  LawContext ctx(rademacher(2));
  auto a = check_truncated_quantile(ctx, 1, Real(std::exp(-1.0) / 4));
  EXPECT_TRUE(a.holds);
  auto b = check_truncated_quantile(ctx, 1, Real(1));
  EXPECT_EQ(b.lhs.to_double(), 0);
  EXPECT_TRUE(b.holds);
  EXPECT_THROW(check_truncated_quantile(ctx, 1, Real::ratio(1, 100)), DomainError);
}

TEST(HJMoment, Examples) {
  LawContext two(rademacher(2));
  auto a = check_hj_moment_claim(two, 1);
  EXPECT_EQ(a.lhs, Real::ratio(3, 2));
  EXPECT_EQ(a.rhs, Real(24));
  EXPECT_EQ(a.certification, Certification::rational);
  LawContext three(rademacher(3));
  auto b = check_hj_moment_claim(three, 2);
  EXPECT_EQ(b.certification, Certification::rational);
  EXPECT_GE(b.slack.sign(), 0);
  LawContext pm(test::point_steps(1, 3));
  auto c = check_hj_moment_claim(pm, 1.5);
  EXPECT_NEAR(c.lhs.to_double(), std::pow(3.0, 1.5), 1e-12);
  EXPECT_TRUE(c.holds);
}

TEST(TruncatedMoment, Examples) {
  LawContext two(rademacher(2));
  auto a = check_truncated_moment(two, 0.5, 1);
  EXPECT_EQ(a.lhs.to_double(), 0);
  EXPECT_NEAR(a.rhs.to_double(), 2 * std::numbers::e, 1e-12);

  auto seq = test::seq_from(R"({"instance": "int", "variables": [
      {"atoms": [[1, "7/10"], [5, "3/10"]]}, {"atoms": [[1, "7/10"], [5, "3/10"]]}]})");
  LawContext ctx(seq);
  auto b = check_truncated_moment(ctx, 0.9, 1);
  EXPECT_EQ(b.details.at("cut"), 1.0);
  EXPECT_NEAR(b.lhs.to_double(), 3.0, 1e-12);
  EXPECT_NEAR(b.details.at("E[l^p]^(1/p)").get<double>(), 3.4, 1e-12);
  EXPECT_NEAR(b.rhs.to_double(), 2 * std::exp(1.8) * 3.4, 1e-9);
  EXPECT_NEAR(b.rhs.to_double(), 41.1, 0.05);

  auto small = check_truncated_moment(ctx, 0.01, 2);
  EXPECT_EQ(small.lhs.to_double(), 0);
  EXPECT_THROW(check_truncated_moment(ctx, 1.0, 1), DomainError);
}

TEST(Tupq, RademacherRequiredConstant) {
  LawContext ctx(rademacher(2));
  auto prm = tupq_defaults(1, 1);
  EXPECT_NEAR(prm.factor(), 1 / std::log(1 + std::log(16.0)), 1e-15);
  EXPECT_NEAR(prm.factor(), 0.753, 1e-3);
  auto need = required_c(ctx, prm);
  EXPECT_NEAR(need.ratio, 1.5 / (prm.factor() * 2.5 + 1), 1e-12);
  EXPECT_NEAR(need.ratio, 0.520, 1e-3);
}

TEST(Tupq, EqualMomentsHoldWithUnitConstant) {
  LawContext ctx(rademacher(3));
  for (double p : {1.0, 2.0, 4.0}) {
    auto prm = tupq_defaults(p, p);
    double c = 1 / std::min(1.0, prm.factor());
    auto [first, second] = check_tupq(ctx, prm, c, c_prime(c, prm.p0, prm.eps));
    EXPECT_TRUE(first.holds) << p;
  }
}

TEST(Tupq, PointStepsNeedAtMostOne) {
  LawContext ctx(test::point_steps(3, 1));
  for (auto [p, q] : std::vector<std::pair<double, double>>{{1, 1}, {1, 2}, {2, 4}, {1, 8}}) {
    EXPECT_LE(required_c(ctx, tupq_defaults(p, q)).ratio, 1.0);
  }
}

TEST(Tupq, SecondFormGate) {
  TupqParameters a{1, 1, 2, 0.5};
  EXPECT_FALSE(a.second_form_applies());
  TupqParameters b{1, 1, 2, 1.0};
  EXPECT_TRUE(b.second_form_applies());
  LawContext ctx(rademacher(2));
  EXPECT_FALSE(check_tupq(ctx, a, 1, 10).second.has_value());
  EXPECT_TRUE(check_tupq(ctx, b, 1, 10).second.has_value());
}

TEST(Tupq, DomainChecks) {
  EXPECT_THROW((TupqParameters{1, 2, 1, 1}.validate()), DomainError);
  EXPECT_THROW((TupqParameters{2, 1, 2, 1}.validate()), DomainError);
  EXPECT_THROW((TupqParameters{1, 1, 2, 3}.validate()), DomainError);
  EXPECT_THROW((TupqParameters{1, 1, 2, -2}.validate()), DomainError);
  EXPECT_NO_THROW(tupq_defaults(1, 8).validate());
}

TEST(Tupq, CPrimeFormula) {
  const double eps = log16();
  EXPECT_NEAR(c_prime(1, 1, eps), 8 * std::numbers::e + std::max(1.0, std::log(eps + 1)), 1e-12);
  EXPECT_NEAR(c_prime(2, 2, eps), 2 * (std::sqrt(8.0) * std::numbers::e + std::max(1.0, std::log(eps + 2) / 2)),
              1e-12);
}

TEST(ToleranceLadder, FloatAndMonteCarlo) {
  EngineInfo exact_engine = EngineInfo::from(EngineSpec::exact());
  auto near = make_report("x", {}, {Real(1.0 + 1e-13), Real(1.0), std::nullopt, {}}, exact_engine, false);
  EXPECT_EQ(near.certification, Certification::floating);
  EXPECT_TRUE(near.holds);
  auto far = make_report("x", {}, {Real(1.0 + 1e-10), Real(1.0), std::nullopt, {}}, exact_engine, false);
  EXPECT_FALSE(far.holds);
  auto rational = make_report("x", {}, {Real::ratio(1, 3), Real::ratio(1, 3), std::nullopt, {}}, exact_engine, true);
  EXPECT_EQ(rational.certification, Certification::rational);
  EXPECT_TRUE(rational.holds);

  EngineInfo mc = EngineInfo::from(EngineSpec::monte_carlo(100, 1));
  Formula f = [](const std::vector<Real>& v) { return Evaluation{v[0], v[1], std::nullopt, {}}; };
  Inputs noisy;
  noisy.add(Real(0.52), 0.01);
  noisy.add(Real(0.5), 0.01);
  auto ok = evaluate("x", {}, noisy, f, mc, false);
  ASSERT_TRUE(ok.z.has_value());
  EXPECT_NEAR(*ok.z, -0.02 / std::sqrt(2e-4), 1e-6);
  EXPECT_TRUE(ok.holds);
  Inputs off;
  off.add(Real(0.6), 0.01);
  off.add(Real(0.5), 0.01);
  EXPECT_FALSE(evaluate("x", {}, off, f, mc, false).holds);
}

TEST(ReportJson, Schema) {
  LawContext ctx(rademacher(2));
  auto j = check_hj(ctx, {{2}, {Real(1)}, Real(1)}).to_json();
  for (const char* key : {"name", "params", "lhs", "rhs", "slack", "holds", "engine", "certification"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["engine"]["kind"], "exact");
  LawContext mc(rademacher(2), EngineSpec::monte_carlo(1000, 4));
  auto m = check_hj(mc, {{2}, {Real(1)}, Real(1)}).to_json();
  EXPECT_EQ(m["engine"]["trials"], 1000);
  EXPECT_EQ(m["engine"]["seed"], 4);
  EXPECT_TRUE(m["engine"].contains("se"));
}

TEST(BasepointRobustness, AbelianTranslationLeavesReportsUnchanged) {
  auto base = test::seq_from(R"({"instance": "cyclic:6", "variables": [
      {"atoms": [[1, "1/3"], [4, "2/3"]]}, {"atoms": [[2, "1/2"], [5, "1/2"]]}, {"atoms": [[3, "1/5"], [0, "4/5"]]}],
      "z0": 0, "z1": 1})");
  const auto& g = base.instance();
  for (int shift = 1; shift < 6; ++shift) {
    Element s = Element::integer(shift);
    auto moved = base.with_basepoints(g.compose(s, base.z0()), g.compose(s, base.z1()));
    LawContext a(base), b(moved);
    for (const char* name : {"hj", "hj_simple", "mogulskii", "ell_sandwich", "moment_sandwich", "hj_moment"}) {
      auto ra = run_default_grid(a, name);
      auto rb = run_default_grid(b, name);
      ASSERT_EQ(ra.reports.size(), rb.reports.size());
      for (std::size_t i = 0; i < ra.reports.size(); ++i) {
        EXPECT_EQ(ra.reports[i].lhs, rb.reports[i].lhs) << name;
        EXPECT_EQ(ra.reports[i].rhs, rb.reports[i].rhs) << name;
      }
    }
  }
}

TEST(Suite, DefaultGridsHoldOnExamples) {
  for (const auto& seq : {rademacher(2), rademacher(3), test::point_steps(2, 1)}) {
    LawContext ctx(seq);
    for (const auto& name : checker_names()) {
      auto res = run_default_grid(ctx, name);
      EXPECT_EQ(res.violations(), 0u) << name;
    }
  }
}

TEST(Suite, Aliases) {
  EXPECT_EQ(canonical_checker("ehm"), "truncated_quantile");
  EXPECT_EQ(canonical_checker("trunc"), "truncated_moment");
  EXPECT_EQ(canonical_checker("hjmoment"), "hj_moment");
  EXPECT_EQ(canonical_checker("mogulskii"), "mogulskii");
  EXPECT_THROW(canonical_checker("nope"), ConfigError);
}

TEST(Suite, RandomParametersAreValid) {
  LawContext ctx(rademacher(3));
  Rng rng = stream_rng(9, 0);
  for (int i = 0; i < 200; ++i) {
    HJParameters p = random_hj_parameters(ctx, rng);
    EXPECT_NO_THROW(p.validate(3));
    EXPECT_LE(p.k(), 3u);
    MogulskiiPoint m = random_mogulskii_point(ctx, rng);
    EXPECT_GE(m.m, 1u);
    EXPECT_LE(m.m, 3u);
  }
}

}  // namespace
}  // namespace msemi
