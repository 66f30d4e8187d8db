#include <gtest/gtest.h>

#include <cmath>

#include "msemi/engine.hpp"
#include "msemi/errors.hpp"
#include "msemi/instances.hpp"
#include "msemi/law_context.hpp"
#include "support.hpp"

namespace msemi {
namespace {

using test::rademacher;

ScalarLaw law_of(std::initializer_list<std::pair<double, Real>> pts) {
  std::vector<LawPoint> v;
  for (const auto& [x, p] : pts) v.push_back({x, p});
  return ScalarLaw::exact(std::move(v));
}

void expect_law(const ScalarLaw& got, const ScalarLaw& want) {
  ASSERT_EQ(got.atoms().size(), want.atoms().size());
  for (std::size_t i = 0; i < got.atoms().size(); ++i) {
    EXPECT_EQ(got.atoms()[i].value, want.atoms()[i].value);
    EXPECT_EQ(got.atoms()[i].probability, want.atoms()[i].probability);
  }
}

TEST(Real, ExactArithmetic) {
  Real a = Real::ratio(1, 3) + Real::ratio(1, 6);
  EXPECT_TRUE(a.is_exact());
  EXPECT_EQ(a, Real::ratio(1, 2));
  EXPECT_EQ(a.to_string(), "1/2");
  EXPECT_EQ(pow(Real::ratio(1, 2), 3), Real::ratio(1, 8));
  EXPECT_EQ(factorial(5), Real(120));
}

TEST(Real, MixingWithDoubleFallsBack) {
  Real a = Real::ratio(1, 2) + Real(0.25);
  EXPECT_FALSE(a.is_exact());
  EXPECT_DOUBLE_EQ(a.to_double(), 0.75);
}

TEST(Real, ParsesFractionsAndDecimalsExactly) {
  EXPECT_EQ(Real::parse("3/10"), Real::ratio(3, 10));
  EXPECT_EQ(Real::parse("0.3"), Real::ratio(3, 10));
  EXPECT_EQ(Real::parse("-12.375"), Real::ratio(-12375, 1000));
  EXPECT_THROW(Real::parse("abc"), ConfigError);
  EXPECT_THROW(Real::parse("1/0"), ConfigError);
}

TEST(PartialProducts, RealLine) {
  auto seq = test::seq_from(R"({"instance": "real:1", "variables": [{"atoms": [[[1], 1]]}, {"atoms": [[[-1], 1]]}]})");
  std::vector<Element> outcome{Element::vector({1}), Element::vector({-1})};
  PathTrace t = partial_products(seq, outcome);
  EXPECT_EQ(t.S[1], Element::vector({0}));
  EXPECT_EQ(t.U, (std::vector<double>{1, 1}));
  EXPECT_EQ(t.Y, (std::vector<double>{1, 1}));
  EXPECT_EQ(t.M, (std::vector<double>{1, 1}));
  std::vector<Element> up{Element::vector({1}), Element::vector({1})};
  PathTrace t2 = partial_products(seq, up);
  EXPECT_EQ(t2.u_n(), 2);
  EXPECT_EQ(t2.m_n(), 1);
}

TEST(PartialProducts, CyclicMetric) {
  auto seq = test::seq_from(R"({"instance": "cyclic:6", "variables": [{"atoms": [[4, "1"]]}, {"atoms": [[4, "1"]]}]})");
  std::vector<Element> outcome{Element::integer(4), Element::integer(4)};
  PathTrace t = partial_products(seq, outcome);
  EXPECT_EQ(t.S[0], Element::integer(4));
  EXPECT_EQ(t.S[1], Element::integer(2));
  EXPECT_EQ(t.U, (std::vector<double>{2, 2}));
}

TEST(PartialProducts, LengthAndCarrierChecked) {
  auto seq = rademacher(2);
  std::vector<Element> short_outcome{Element::integer(1)};
  EXPECT_THROW(partial_products(seq, short_outcome), DomainError);
  std::vector<Element> foreign{Element::scalar(1.0), Element::integer(1)};
  EXPECT_THROW(partial_products(seq, foreign), CarrierMismatch);
}

TEST(ExactLaw, RademacherTwo) {
  expect_law(law_of_Un(rademacher(2)), law_of({{1, Real::ratio(1, 2)}, {2, Real::ratio(1, 2)}}));
  expect_law(law_of_Mn(rademacher(2)), law_of({{1, Real(1)}}));
}

TEST(ExactLaw, RademacherThree) {
  expect_law(law_of_Un(rademacher(3)),
             law_of({{1, Real::ratio(1, 2)}, {2, Real::ratio(1, 4)}, {3, Real::ratio(1, 4)}}));
}

TEST(ExactLaw, Moments) {
  ScalarLaw u = law_of_Un(rademacher(2));
  EXPECT_DOUBLE_EQ(u.moment(1), 1.5);
  EXPECT_DOUBLE_EQ(u.moment(2), 2.5);
}

TEST(ExactLaw, SingleStepMatchesMagnitude) {
  auto seq = test::seq_from(R"({"instance": "int", "variables": [{"atoms": [[-2, "1/3"], [5, "2/3"]]}]})");
  expect_law(law_of_Un(seq), magnitude_law(seq.instance(), seq.z0(), seq.distribution(0)));
}

TEST(ExactLaw, MassIsExactlyOne) {
  auto seq = test::seq_from(R"({"instance": "sym:3", "variables": [
      {"atoms": [[[1, 0, 2], "1/3"], [[0, 2, 1], "2/3"]]},
      {"atoms": [[[2, 0, 1], "1/7"], [[0, 1, 2], "6/7"]]},
      {"atoms": [[[1, 2, 0], "1/2"], [[2, 1, 0], "1/2"]]}]})");
  for (const auto& law : exact_functional_laws(seq, {functional::u_n, functional::m_n, functional::d_n})) {
    Real total(0);
    for (const auto& a : law.atoms()) total += a.probability;
    EXPECT_TRUE(total.is_exact());
    EXPECT_EQ(total, Real(1));
  }
}

TEST(ExactLaw, CapIsEnforced) {
  EXPECT_THROW(exact_functional_law(rademacher(4), functional::u_n, 15), EnumerationCapExceeded);
  EXPECT_NO_THROW(exact_functional_law(rademacher(4), functional::u_n, 16));
}

TEST(ExactLaw, SamplersCannotBeEnumerated) {
  auto seq = test::seq_from(R"({"instance": "torus:1", "variables": [{"sampler": "instance"}]})");
  EXPECT_THROW(law_of_Un(seq), DomainError);
}

TEST(PathInvariants, MaxOfMagnitudesAtMostTwiceU) {
  auto seq = test::seq_from(R"({"instance": "graphgroup:3", "variables": [
      {"atoms": [[[[0, 1]], "1/2"], [[[0, 1], [1, 2]], "1/2"]]},
      {"atoms": [[[[0, 2]], "1/3"], [[], "2/3"]]},
      {"atoms": [[[[0, 1], [0, 2], [1, 2]], "1/4"], [[[1, 2]], "3/4"]]}]})");
  std::size_t paths = 0;
  enumerate_paths(seq, [&](const PathTrace& t, const Real&) {
    ++paths;
    for (std::size_t j = 0; j < t.size(); ++j) {
      EXPECT_LE(t.M[j], 2 * t.U[j]);
      if (j > 0) {
        EXPECT_GE(t.U[j], t.U[j - 1]);
        EXPECT_GE(t.M[j], t.M[j - 1]);
      }
    }
  });
  EXPECT_EQ(paths, 8u);
}

TEST(PathInvariants, MagnitudeLawIgnoresBasepoint) {
  auto seq = test::seq_from(R"({"instance": "sym:3", "variables": [
      {"atoms": [[[1, 0, 2], "1/3"], [[1, 2, 0], "1/3"], [[0, 1, 2], "1/3"]]}]})");
  const auto& g = seq.instance();
  ScalarLaw ref = magnitude_law(g, *g.identity(), seq.distribution(0));
  for (const auto& z0 : g.elements()) expect_law(magnitude_law(g, z0, seq.distribution(0)), ref);
}

TEST(MonteCarlo, TailWithinThreeStandardErrors) {
  ScalarLaw mc = monte_carlo_law(rademacher(2), functional::u_n, 100000, 42);
  Real p = mc.tail(1.5);
  double se = mc.tail_standard_error(p);
  EXPECT_LE(std::abs(p.to_double() - 0.5), 3 * se);
  EXPECT_EQ(mc.trials(), 100000u);
}

TEST(MonteCarlo, PointMassMatchesExact) {
  auto seq = test::point_steps(3, 2);
  ScalarLaw mc = monte_carlo_law(seq, functional::u_n, 1000, 1);
  ASSERT_EQ(mc.atoms().size(), 1u);
  EXPECT_EQ(mc.atoms()[0].value, 6);
  EXPECT_EQ(mc.atoms()[0].probability.to_double(), 1.0);
  EXPECT_EQ(mc.tail_standard_error(mc.tail(3)), 0.0);
}

TEST(MonteCarlo, TorusStaysWithinDiameter) {
  nlohmann::json vars = nlohmann::json::array();
  for (int i = 0; i < 10; ++i) vars.push_back({{"sampler", "instance"}});
  auto seq = sequence_from_json({{"instance", "torus:1"}, {"variables", vars}});
  ScalarLaw mc = monte_carlo_law(seq, functional::d_n, 5000, 3);
  EXPECT_GE(mc.min_value(), 0.0);
  EXPECT_LE(mc.max_value(), 0.5);
}

TEST(MonteCarlo, DeterministicPerTrial) {
  auto seq = rademacher(4);
  ScalarLaw a = monte_carlo_law(seq, functional::u_n, 9000, 17);
  ScalarLaw b = monte_carlo_law(seq, functional::u_n, 9000, 17);
  expect_law(a, b);
  // Per-trial streams: the first trials of a longer run draw the same outcomes.
  for (std::uint64_t i = 0; i < 50; ++i) EXPECT_EQ(sample_outcome(seq, 17, i), sample_outcome(seq, 17, i));
  EXPECT_NE(sample_outcome(seq, 17, 0), sample_outcome(seq, 18, 0));
}

TEST(LawContext, EnginesShareFunctionals) {
  LawContext ex(rademacher(2));
  EXPECT_TRUE(ex.rational());
  EXPECT_EQ(ex.Y().size(), 2u);
  LawContext mc(rademacher(2), EngineSpec::monte_carlo(2000, 5));
  EXPECT_FALSE(mc.rational());
  EXPECT_TRUE(mc.U().is_empirical());
}

TEST(EngineKind, Parse) {
  EXPECT_EQ(parse_engine_kind("exact"), EngineKind::exact);
  EXPECT_EQ(parse_engine_kind("mc"), EngineKind::monte_carlo);
  EXPECT_EQ(parse_engine_kind("monte-carlo"), EngineKind::monte_carlo);
  EXPECT_THROW(parse_engine_kind("quantum"), ConfigError);
}

TEST(ScalarLaw, TailQueries) {
  ScalarLaw l = law_of({{0, Real::ratio(7, 10)}, {1, Real::ratio(3, 10)}});
  EXPECT_EQ(l.tail(0), Real::ratio(3, 10));
  EXPECT_EQ(l.tail_inclusive(0), Real(1));
  EXPECT_EQ(l.cdf(0), Real::ratio(7, 10));
  EXPECT_EQ(l.cdf_strict(0), Real(0));
  EXPECT_EQ(l.tail(1), Real(0));
}

TEST(ScalarLaw, RejectsBadMass) {
  EXPECT_THROW(law_of({{0, Real::ratio(1, 2)}}), DomainError);
}

}  // namespace
}  // namespace msemi
