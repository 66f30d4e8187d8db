#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "msemi/errors.hpp"
#include "msemi/instances.hpp"
#include "msemi/levy.hpp"

namespace msemi {
namespace {

WalkConfig torus_walk(const std::string& schedule, std::size_t paths = 40) {
  WalkConfig cfg;
  cfg.instance = parse_instance("torus:1");
  cfg.schedule = Schedule::parse(schedule);
  cfg.paths = paths;
  cfg.seed = 5;
  return cfg;
}

TEST(Schedule, ParseAndPrint) {
  for (const char* s : {"geometric:3", "constant:uniform", "zero", "mixed:50"}) {
    EXPECT_EQ(Schedule::parse(s).to_string(), s);
  }
  EXPECT_THROW(Schedule::parse("geometric:1"), ConfigError);
  EXPECT_THROW(Schedule::parse("spiral"), ConfigError);
}

TEST(WalkConfig, Validation) {
  WalkConfig cfg = torus_walk("zero");
  EXPECT_NO_THROW(cfg.validate());
  cfg.horizon = 100;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = torus_walk("zero");
  cfg.eps = {0.01, 0.1};
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = torus_walk("zero");
  cfg.windows = {50, 10};
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(Levy, GeometricGapsAreSmallAndNonincreasing) {
  WalkConfig cfg = torus_walk("geometric:3");
  auto traces = simulate_walk(cfg);
  auto v = detect_convergence(*cfg.instance, traces, cfg.eps, cfg.windows);
  for (std::size_t p = 0; p < traces.size(); ++p) {
    for (std::size_t w = 0; w < cfg.windows.size(); ++w) {
      EXPECT_LE(v.gaps[p][w], std::pow(3.0, -static_cast<double>(cfg.windows[w])) + 1e-15);
      EXPECT_LE(v.gaps[p][w], 2 * v.q[p][w] + 1e-15);
      if (w > 0) {
        EXPECT_LE(v.gaps[p][w], v.gaps[p][w - 1]);
      }
    }
  }
  EXPECT_EQ(v.verdict, Verdict::converging);
  EXPECT_EQ(v.inconclusive_fraction, 0.0);
}

TEST(Levy, ZeroScheduleHasNoGaps) {
  WalkConfig cfg = torus_walk("zero", 5);
  auto r = levy_equivalence_experiment(cfg);
  for (std::size_t w = 0; w < cfg.windows.size(); ++w) EXPECT_EQ(r.pathwise.max_gap(w), 0.0);
  EXPECT_EQ(r.pathwise.verdict, Verdict::converging);
  EXPECT_EQ(r.agreement, 1.0);
}

TEST(Levy, UniformStepsDiverge) {
  auto r = levy_equivalence_experiment(torus_walk("constant:uniform"));
  EXPECT_EQ(r.pathwise.verdict, Verdict::diverging);
  EXPECT_EQ(r.in_probability, Verdict::diverging);
  EXPECT_EQ(r.agreement, 1.0);
}

TEST(Levy, MixedScheduleConverges) {
  auto r = levy_equivalence_experiment(torus_walk("mixed:50"));
  EXPECT_EQ(r.pathwise.verdict, Verdict::converging);
  EXPECT_EQ(r.in_probability, Verdict::converging);
}

TEST(Levy, RealLineGeometric) {
  WalkConfig cfg = torus_walk("geometric:3");
  cfg.instance = parse_instance("real:2");
  EXPECT_EQ(levy_equivalence_experiment(cfg).pathwise.verdict, Verdict::converging);
}

TEST(Levy, Deterministic) {
  WalkConfig cfg = torus_walk("constant:uniform", 10);
  EXPECT_EQ(levy_equivalence_experiment(cfg).to_json().dump(), levy_equivalence_experiment(cfg).to_json().dump());
  WalkConfig other = cfg;
  other.seed = 6;
  EXPECT_NE(levy_equivalence_experiment(cfg).to_json()["pathwise"].dump(),
            levy_equivalence_experiment(other).to_json()["pathwise"].dump());
}

TEST(Levy, TraceCsv) {
  WalkConfig cfg = torus_walk("geometric:3", 2);
  auto traces = simulate_walk(cfg);
  std::ostringstream out;
  write_trace_csv(out, traces);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "path,j,distance");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 2);
  }
  EXPECT_EQ(rows, 2 * cfg.horizon);
}

}  // namespace
}  // namespace msemi
