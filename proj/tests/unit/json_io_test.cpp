#include <gtest/gtest.h>

#include "msemi/errors.hpp"
#include "msemi/json_io.hpp"
#include "support.hpp"

namespace msemi {
namespace {

using nlohmann::json;

TEST(JsonIo, RejectsUnknownKeys) {
  EXPECT_THROW(sequence_from_json(json::parse(R"({"instance": "int", "variables": [], "extra": 1})")), ConfigError);
  EXPECT_THROW(sequence_from_json(json::parse(R"({"instance": "int", "variables": [{"atoms": [[1, "1"]], "w": 2}]})")),
               ConfigError);
}

TEST(JsonIo, RejectsMalformedVariables) {
  EXPECT_THROW(sequence_from_json(json::parse(R"({"variables": []})")), ConfigError);
  EXPECT_THROW(sequence_from_json(json::parse(R"({"instance": "int", "variables": [{}]})")), ConfigError);
  EXPECT_THROW(sequence_from_json(json::parse(R"({"instance": "int", "variables": [{"atoms": [[1]]}]})")),
               ConfigError);
  EXPECT_THROW(sequence_from_json(json::parse(R"({"instance": "int", "variables": [{"sampler": "other"}]})")),
               ConfigError);
  EXPECT_THROW(sequence_from_json(json::parse(R"({"instance": "int", "variables": [{"atoms": [[1, "1/2"]]}]})")),
               Error);
}

TEST(JsonIo, RoundTrip) {
  const char* text = R"({"instance": "sym:3", "variables": [
      {"atoms": [[[1, 0, 2], "1/3"], [[0, 2, 1], "2/3"]]}, {"atoms": [[[2, 0, 1], "1"]]}],
      "z0": [0, 1, 2], "z1": [1, 0, 2]})";
  auto seq = test::seq_from(text);
  json once = sequence_to_json(seq);
  EXPECT_EQ(sequence_to_json(sequence_from_json(once)), once);
  EXPECT_EQ(once["z1"], json::parse("[1, 0, 2]"));
}

TEST(JsonIo, RoundTripCompletion) {
  auto seq = test::seq_from(R"({"instance": "complete:posreal", "variables": [{"atoms": [["1'", "1/4"], [2.5, "3/4"]]}]})");
  json once = sequence_to_json(seq);
  EXPECT_EQ(sequence_to_json(sequence_from_json(once)), once);
}

TEST(JsonIo, Probabilities) {
  EXPECT_EQ(probability_from_json("3/10"), Real::ratio(3, 10));
  EXPECT_EQ(probability_from_json("0.3"), Real::ratio(3, 10));
  EXPECT_TRUE(probability_from_json("0.3").is_exact());
  EXPECT_FALSE(probability_from_json(0.3).is_exact());
  EXPECT_THROW(probability_from_json(true), ConfigError);
  EXPECT_EQ(probability_to_json(Real::ratio(1, 3)), "1/3");
}

TEST(JsonIo, EngineFields) {
  auto cfg = sequence_config_from_json(
      json::parse(R"({"instance": "int", "variables": [{"atoms": [[1, "1"]]}], "engine": "mc", "trials": 50, "seed": 3})"));
  EXPECT_EQ(cfg.engine, EngineKind::monte_carlo);
  EXPECT_EQ(cfg.trials, 50u);
  EXPECT_EQ(cfg.seed, 3u);
}

TEST(JsonIo, LawToJson) {
  auto law = law_of_Un(test::rademacher(2));
  EXPECT_EQ(law_to_json(law), json::parse(R"([[1.0, "1/2"], [2.0, "1/2"]])"));
}

}  // namespace
}  // namespace msemi
