#include <gtest/gtest.h>

#include <cmath>

#include "msemi/axioms.hpp"
#include "msemi/completion.hpp"
#include "msemi/errors.hpp"
#include "msemi/instances.hpp"

namespace msemi {
namespace {

TEST(Compose, CyclicWrapsModulo) {
  CyclicGroup g(6);
  EXPECT_EQ(g.compose(Element::integer(2), Element::integer(5)), Element::integer(1));
}

TEST(Compose, GraphGroupIdentity) {
  LabelledGraphGroup g(3);
  Element a = g.graph({{0, 1}, {1, 2}});
  EXPECT_EQ(g.compose(a, *g.identity()), a);
}

TEST(Compose, TranspositionIsAnInvolution) {
  SymmetricGroup g(3);
  Element t = g.transposition(0, 1);
  EXPECT_EQ(g.compose(t, t), *g.identity());
}

TEST(Compose, ForeignElementIsRejected) {
  CyclicGroup g(6);
  EXPECT_THROW(g.compose(Element::integer(7), Element::integer(1)), CarrierMismatch);
  EXPECT_THROW(g.compose(Element::scalar(1.0), Element::integer(1)), CarrierMismatch);
}

TEST(Distance, HammingOnPermutations) {
  SymmetricGroup g(3);
  EXPECT_EQ(g.distance(*g.identity(), g.transposition(0, 1)), 2.0);
}

TEST(Distance, TorusWrapsAround) {
  Torus g(1, Norm::euclidean);
  EXPECT_NEAR(g.distance(Element::vector({0.1}), Element::vector({0.9})), 0.2, 1e-15);
}

TEST(Distance, GraphGroupCountsEdges) {
  LabelledGraphGroup g(3);
  EXPECT_EQ(g.distance(*g.identity(), g.graph({{0, 1}, {0, 2}})), 2.0);
}

TEST(Completion, DistanceToAdjoinedUnit) {
  InstancePtr g = adjoin_identity(std::make_shared<PositiveRealsAdditive>());
  EXPECT_DOUBLE_EQ(g->distance(Element::adjoined_unit(), Element::scalar(3.5)), 3.5);
  EXPECT_EQ(g->compose(Element::adjoined_unit(), Element::scalar(2.0)), Element::scalar(2.0));
}

TEST(Completion, MonoidIsReturnedUnchanged) {
  InstancePtr g = std::make_shared<CyclicGroup>(6);
  EXPECT_EQ(adjoin_identity(g).get(), g.get());
}

TEST(Completion, IsIdempotent) {
  InstancePtr once = adjoin_identity(std::make_shared<PositiveRealsAdditive>());
  EXPECT_EQ(adjoin_identity(once).get(), once.get());
}

TEST(Completion, ProbeChoiceDoesNotMatter) {
  auto base = std::make_shared<PositiveRealsAdditive>();
  MonoidCompletion g(base);
  for (double a : {0.25, 1.0, 7.5}) {
    EXPECT_NEAR(g.distance_to_unit_via(Element::scalar(a), Element::scalar(2.25)), 2.25, 1e-12);
  }
}

TEST(Completion, TelescopingBoundHolds) {
  InstancePtr g = adjoin_identity(std::make_shared<PositiveRealsAdditive>());
  std::vector<Element> z{Element::scalar(1.5), Element::adjoined_unit(), Element::scalar(2.0),
                         Element::scalar(0.5), Element::adjoined_unit()};
  for (std::size_t k = 0; k + 1 < z.size(); ++k) EXPECT_LE(telescoping_excess(*g, z, k), 1e-12);
}

TEST(Axioms, GraphGroupExhaustive) {
  LabelledGraphGroup g(3);
  ASSERT_EQ(g.elements().size(), 8u);
  AxiomReport r = verify_axioms(g, Exhaustive{});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.total_violations(), 0u);
}

TEST(Axioms, FiniteCatalogExhaustive) {
  for (const char* spec : {"cyclic:6", "sym:3", "graphgroup:3"}) {
    EXPECT_TRUE(verify_axioms(*parse_instance(spec), Exhaustive{}).ok()) << spec;
  }
}

TEST(Axioms, TorusSampled) {
  Torus g(2, Norm::euclidean);
  EXPECT_TRUE(verify_axioms(g, Sampled{10000, 7}, 1e-12).ok());
}

TEST(Axioms, SampledCatalogPasses) {
  for (const auto& spec : catalog_instance_specs()) {
    EXPECT_TRUE(verify_axioms(*parse_instance(spec), Sampled{2000, 3}, 1e-9).ok()) << spec;
  }
}

TEST(Axioms, MultiplicativeRealsBreakInvariance) {
  MultiplicativeReals g;
  AxiomReport r = verify_axioms(g, Sampled{1000, 7});
  EXPECT_FALSE(r.ok());
  EXPECT_GT(r.check(axiom::left_invariance).violations + r.check(axiom::right_invariance).violations, 0u);
  EXPECT_EQ(r.check(axiom::associativity).violations, 0u);
}

TEST(Axioms, ExhaustiveNeedsFiniteCarrier) {
  EXPECT_THROW(verify_axioms(Integers{}, Exhaustive{}), DomainError);
}

TEST(Axioms, SampledRunsAreDeterministic) {
  MultiplicativeReals g;
  AxiomReport a = verify_axioms(g, Sampled{500, 11});
  AxiomReport b = verify_axioms(g, Sampled{500, 11});
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].violations, b.checks[i].violations);
    EXPECT_EQ(a.checks[i].worst_witness, b.checks[i].worst_witness);
  }
}

TEST(GroupMetric, IntegersHaveAllFour) {
  PropertySet p = classify_group_metric(Integers{}, Sampled{2000, 1});
  EXPECT_EQ(p.count(), 4);
  EXPECT_TRUE(p.implication_consistent());
}

TEST(GroupMetric, HammingOnS3HasAllFour) {
  PropertySet p = classify_group_metric(SymmetricGroup(3), Exhaustive{});
  EXPECT_EQ(p.count(), 4);
}

TEST(GroupMetric, WordMetricIsOnlyLeftInvariant) {
  WordMetricSymmetricGroup g(3, WordMetricSymmetricGroup::Side::left);
  PropertySet p = classify_group_metric(g, Exhaustive{});
  EXPECT_TRUE(p.left_invariant);
  EXPECT_FALSE(p.right_invariant);
  EXPECT_FALSE(p.inverse_isometry);
  EXPECT_FALSE(p.conjugation_invariant);
  EXPECT_EQ(p.count(), 1);
  EXPECT_TRUE(p.implication_consistent());
}

TEST(GroupMetric, RightWordMetricIsOnlyRightInvariant) {
  WordMetricSymmetricGroup g(3, WordMetricSymmetricGroup::Side::right);
  PropertySet p = classify_group_metric(g, Exhaustive{});
  EXPECT_TRUE(p.right_invariant);
  EXPECT_EQ(p.count(), 1);
}

TEST(GroupMetric, ImplicationHoldsOnCatalogGroups) {
  for (const char* spec : {"cyclic:6", "graphgroup:3", "sym:3", "sym:4"}) {
    PropertySet p = classify_group_metric(*parse_instance(spec), Sampled{3000, 5});
    EXPECT_TRUE(p.implication_consistent()) << spec;
  }
}

TEST(GroupMetric, SemigroupIsRejected) {
  EXPECT_THROW(classify_group_metric(PositiveRealsAdditive{}, Sampled{10, 1}), NotAGroup);
}

TEST(InstanceSpec, ParsesCatalog) {
  for (const auto& spec : catalog_instance_specs()) EXPECT_EQ(parse_instance(spec)->name().empty(), false) << spec;
  EXPECT_EQ(parse_instance("cyclic:6")->name(), "cyclic:6");
  EXPECT_EQ(parse_instance("complete:posreal")->name(), "complete:posreal");
  EXPECT_THROW(parse_instance("cyclic:"), ConfigError);
  EXPECT_THROW(parse_instance("nosuch"), ConfigError);
}

TEST(InstanceSpec, SupNormOption) {
  auto g = parse_instance("real:2:sup");
  EXPECT_DOUBLE_EQ(g->distance(Element::vector({0, 0}), Element::vector({3, -4})), 4.0);
  auto e = parse_instance("real:2");
  EXPECT_DOUBLE_EQ(e->distance(Element::vector({0, 0}), Element::vector({3, -4})), 5.0);
}

}  // namespace
}  // namespace msemi
