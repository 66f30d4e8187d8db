#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "msemi/constants.hpp"
#include "msemi/corpus.hpp"
#include "msemi/errors.hpp"
#include "msemi/json_io.hpp"

namespace msemi {
namespace {

CorpusSpec small_spec(std::size_t count) {
  CorpusSpec s;
  s.count = count;
  return s;
}

TEST(Corpus, DefaultSizeAndInstances) {
  auto corpus = generate_corpus(CorpusSpec{});
  ASSERT_EQ(corpus.size(), 10000u);
  std::set<std::string> names;
  for (const auto& seq : corpus) {
    names.insert(seq.instance().name());
    EXPECT_GE(seq.size(), 1u);
    EXPECT_LE(seq.size(), 5u);
  }
  EXPECT_EQ(names, (std::set<std::string>{"cyclic:6", "sym:3", "graphgroup:3", "int", "complete:posreal"}));
}

TEST(Corpus, SameSeedSameBytes) {
  CorpusSpec s = small_spec(300);
  EXPECT_EQ(corpus_to_json(s, generate_corpus(s)).dump(), corpus_to_json(s, generate_corpus(s)).dump());
  CorpusSpec t = s;
  t.seed = 2;
  EXPECT_NE(corpus_to_json(s, generate_corpus(s))["sequences"].dump(),
            corpus_to_json(t, generate_corpus(t))["sequences"].dump());
}

TEST(Corpus, PrefixesCoincide) {
  auto small = generate_corpus(small_spec(50));
  auto large = generate_corpus(small_spec(200));
  for (std::size_t i = 0; i < small.size(); ++i) {
    EXPECT_EQ(sequence_to_json(small[i]).dump(), sequence_to_json(large[i]).dump()) << i;
  }
}

TEST(Corpus, WeightsAreExact) {
  for (const auto& seq : generate_corpus(small_spec(100))) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      Real total(0);
      for (const auto& a : seq.distribution(i).atoms()) {
        EXPECT_TRUE(a.probability.is_exact());
        total += a.probability;
      }
      EXPECT_EQ(total, Real(1));
    }
  }
}

TEST(Corpus, CapIsChecked) {
  CorpusSpec s = small_spec(10);
  s.max_length = 30;
  s.max_support = 3;
  EXPECT_THROW(generate_corpus(s), EnumerationCapExceeded);
  s.cap = 100;
  s.max_length = 5;
  EXPECT_THROW(generate_corpus(s), EnumerationCapExceeded);
}

TEST(Corpus, SpecJsonRoundTrip) {
  CorpusSpec s = small_spec(17);
  s.instances = {"int", "cyclic:6"};
  s.seed = 99;
  CorpusSpec back = CorpusSpec::from_json(s.to_json());
  EXPECT_EQ(back.to_json(), s.to_json());
  EXPECT_THROW(CorpusSpec::from_json({{"cuont", 3}}), ConfigError);
}

TEST(Constants, C1IsMonotoneInCorpusInclusion) {
  auto corpus = generate_corpus(small_spec(400));
  double prev = 0;
  for (std::size_t n : {50u, 150u, 400u}) {
    std::vector<IndependentSequence> prefix(corpus.begin(), corpus.begin() + n);
    ConstantEstimate e = estimate_c1(prefix, default_c1_grid());
    EXPECT_TRUE(std::isfinite(e.value));
    EXPECT_GE(e.value, prev);
    prev = e.value;
  }
}

TEST(Constants, C1WitnessReproduces) {
  auto corpus = generate_corpus(small_spec(200));
  ConstantEstimate e = estimate_c1(corpus, default_c1_grid());
  ASSERT_TRUE(e.witness.has_value());
  LawContext ctx(sequence_from_json(e.witness->sequence));
  Real t = Real::parse(e.witness->params.at("t").get<std::string>());
  Real s = Real::parse(e.witness->params.at("s").get<std::string>());
  EXPECT_DOUBLE_EQ(check_quantile_lemma(ctx, t, s).ratio, e.value);
  EXPECT_EQ(sequence_to_json(corpus[e.witness->index]), e.witness->sequence);
}

TEST(Constants, CIsFiniteAndMonotone) {
  auto corpus = generate_corpus(small_spec(200));
  std::vector<IndependentSequence> prefix(corpus.begin(), corpus.begin() + 60);
  CEstimate small = estimate_c(prefix, 1, log16(), default_pq_grid());
  CEstimate full = estimate_c(corpus, 1, log16(), default_pq_grid());
  EXPECT_TRUE(std::isfinite(full.c.value));
  EXPECT_GT(full.c.value, 0);
  EXPECT_GE(full.c.value, small.c.value);
  EXPECT_DOUBLE_EQ(full.c_prime, c_prime(full.c.value, 1, log16()));
  EXPECT_EQ(full.second_violations, 0u);
  EXPECT_GT(full.second_checked, 0u);
}

TEST(Constants, CWitnessReproduces) {
  auto corpus = generate_corpus(small_spec(100));
  CEstimate est = estimate_c(corpus, 1, log16(), default_pq_grid());
  ASSERT_TRUE(est.c.witness.has_value());
  const auto& p = est.c.witness->params;
  TupqParameters prm{p.at("p0").get<double>(), p.at("p").get<double>(), p.at("q").get<double>(),
                     p.at("eps").get<double>()};
  LawContext ctx(sequence_from_json(est.c.witness->sequence));
  EXPECT_DOUBLE_EQ(required_c(ctx, prm).ratio, est.c.value);
}

TEST(Constants, TBoundsAreFinite) {
  auto corpus = generate_corpus(small_spec(150));
  auto ests = estimate_tbounds(corpus, {0.5, 1, 2});
  ASSERT_FALSE(ests.empty());
  for (const auto& e : ests) {
    EXPECT_TRUE(std::isfinite(e.value)) << e.constant;
    EXPECT_GT(e.evaluated, 0u) << e.constant;
  }
}

TEST(Constants, DeterministicJson) {
  auto corpus = generate_corpus(small_spec(80));
  EXPECT_EQ(estimate_c1(corpus, default_c1_grid()).to_json().dump(),
            estimate_c1(corpus, default_c1_grid()).to_json().dump());
}

}  // namespace
}  // namespace msemi
