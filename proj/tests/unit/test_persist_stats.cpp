#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "core/error.hpp"
#include "core/persist.hpp"
#include "core/stats.hpp"

using namespace wpb;

TEST(Persist, JsonRoundTrip) {
  for (auto a : {Algorithm::GaOp, Algorithm::GaCb, Algorithm::GaMo, Algorithm::Gp}) {
    RunConfig c = RunConfig::defaults(a, 4);
    c.population = 20;
    c.budget = 400;
    c.seed = 99;
    c.run_id = 3;
    c.swap_mode = SwapMode::PerSlice;
    const auto r = run(c);
    const auto line = to_json_line(r);
    EXPECT_EQ(line.find('\n'), std::string::npos);
    const auto back = from_json_line(line);
    EXPECT_EQ(back, r);
    EXPECT_EQ(to_json_line(back), line);
  }
}

TEST(Persist, RejectsCorruptLines) {
  EXPECT_THROW(from_json_line("{"), Error);
  EXPECT_THROW(from_json_line("{\"best_fitness\": 3}"), Error);
  EXPECT_THROW(from_json_line("[]"), Error);
}

TEST(Persist, TraceCsv) {
  RunResult r;
  r.config.run_id = 7;
  r.trace = {{1, -3}, {15, 12}};
  std::ostringstream out;
  write_trace_csv(out, r);
  EXPECT_EQ(out.str(), "7,1,-3\n7,15,12\n");
  EXPECT_EQ(kTraceCsvHeader, "run_id,evaluation,best_fitness");
}

TEST(Stats, MatchesDirectComputation) {
  const std::vector<std::int64_t> v{60, 61, 60, 59, 60, 60, 61};
  const auto s = summarize(v);
  EXPECT_EQ(s.count, 7u);
  EXPECT_EQ(s.min, 59);
  EXPECT_EQ(s.max, 61);
  EXPECT_DOUBLE_EQ(s.median, 60);
  // Exact rationals: mean = 421/7, sum of squared deviations = 20/7, N-1 = 6.
  EXPECT_NEAR(s.mean, 421.0 / 7.0, 1e-12);
  EXPECT_NEAR(s.stddev, std::sqrt(20.0 / 42.0), 1e-9);
}

TEST(Stats, EvenCountsAndEdges) {
  const std::vector<std::int64_t> v{4, 1, 3, 2};
  const auto s = summarize(v);
  EXPECT_DOUBLE_EQ(s.median, 2.5);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_NEAR(s.stddev, std::sqrt(5.0 / 3.0), 1e-12);
  const std::vector<std::int64_t> one{-5};
  EXPECT_DOUBLE_EQ(summarize(one).stddev, 0.0);
  EXPECT_THROW(summarize(std::vector<std::int64_t>{}), Error);
}
