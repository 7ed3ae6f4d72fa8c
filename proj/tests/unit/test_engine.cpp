#include <gtest/gtest.h>

#include <map>

#include "core/engine.hpp"
#include "core/error.hpp"

using namespace wpb;

namespace {

RunConfig small(Algorithm a, std::uint64_t seed = 1) {
  RunConfig c = RunConfig::defaults(a, 8);
  c.population = a == Algorithm::Gp ? 100 : 40;
  c.budget = 3000;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(Tournament, EliminatesWorst) {
  const std::vector<std::int64_t> fitness{5, 3, 1, 7};
  Rng rng(1);
  EXPECT_EQ(tournament_worst(fitness, {0, 1, 2}, rng), 2u);
  EXPECT_EQ(tournament_worst(fitness, {2, 3, 0}, rng), 0u);
}

TEST(Tournament, TiesAreUniform) {
  const std::vector<std::int64_t> fitness{4, 4, 4, 9};
  Rng rng(2);
  std::map<std::size_t, int> hits;
  for (int t = 0; t < 30000; ++t) ++hits[tournament_worst(fitness, {0, 1, 2}, rng)];
  ASSERT_EQ(hits.size(), 3u);
  for (auto [pos, count] : hits) EXPECT_NEAR(count, 10000, 600) << pos;
  for (int t = 0; t < 100; ++t) ASSERT_NE(tournament_worst(fitness, {3, 0, 1}, rng), 0u);
}

TEST(Seeds, DerivedSeedsAreDistinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 10000; ++i) seen.insert(derive_seed(42, i));
  EXPECT_EQ(seen.size(), 10000u);
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

TEST(Config, DefaultsAndValidation) {
  const auto ga = RunConfig::defaults(Algorithm::GaCb);
  EXPECT_EQ(ga.population, 200u);
  EXPECT_DOUBLE_EQ(ga.p_mut, 0.1);
  EXPECT_EQ(ga.budget, 500000u);
  const auto gp = RunConfig::defaults(Algorithm::Gp);
  EXPECT_EQ(gp.population, 1000u);
  EXPECT_DOUBLE_EQ(gp.p_mut, 0.9);
  EXPECT_EQ(gp.gp_max_depth, 5);
  EXPECT_NO_THROW(ga.validate());

  auto c = ga;
  c.n = 6;
  try {
    c.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Infeasible);
  }
  c = ga;
  c.population = 2;
  EXPECT_THROW(c.validate(), Error);
  c = ga;
  c.budget = c.population;
  EXPECT_THROW(c.validate(), Error);
  c = ga;
  c.p_mut = 1.5;
  EXPECT_THROW(c.validate(), Error);
  EXPECT_EQ(parse_algorithm("ga-mo"), Algorithm::GaMo);
  EXPECT_THROW(parse_algorithm("ga-xx"), Error);
}

TEST(Run, DeterministicPerSeed) {
  for (auto a : {Algorithm::GaOp, Algorithm::GaCb, Algorithm::GaMo, Algorithm::Gp}) {
    const auto r1 = run(small(a, 5));
    const auto r2 = run(small(a, 5));
    EXPECT_EQ(r1, r2) << algorithm_name(a);
    const auto r3 = run(small(a, 6));
    EXPECT_FALSE(r1.trace == r3.trace && r1.best_genotype == r3.best_genotype) << algorithm_name(a);
  }
}

TEST(Run, BudgetTraceAndReporting) {
  for (auto a : {Algorithm::GaOp, Algorithm::GaCb, Algorithm::GaMo, Algorithm::Gp}) {
    const auto cfg = small(a);
    const auto r = run(cfg);
    EXPECT_EQ(r.evaluations, cfg.budget);
    ASSERT_FALSE(r.trace.empty());
    EXPECT_EQ(r.trace.front().evaluation, 1u);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      ASSERT_GT(r.trace[i].evaluation, r.trace[i - 1].evaluation);
      ASSERT_GT(r.trace[i].best_fitness, r.trace[i - 1].best_fitness);
    }
    EXPECT_EQ(r.trace.back().best_fitness, r.best_fitness);

    const auto f = BooleanFunction::from_hex(8, r.best_truth_table);
    WeightClassIndex idx(8);
    FitnessEvaluator e(8);
    EXPECT_EQ(e.evaluate(cfg.fitness, f).value, r.best_fitness);
    EXPECT_EQ(penalty(f, idx), r.pen);
    EXPECT_EQ(anf(f).monomial_count(), r.anf_monomials);
    if (r.pen == 0) {
      EXPECT_EQ(r.nl_profile.size(), 7u);
      EXPECT_EQ(r.nl_profile, e.full_profile(f));
    }
  }
}

TEST(Run, WeightwiseNeverComputesPenalty) {
  for (auto a : {Algorithm::GaCb, Algorithm::GaMo}) {
    const auto r = run(small(a));
    EXPECT_EQ(r.penalty_computations, 0u);
    EXPECT_EQ(r.nonlinearity_computations, r.evaluations);
    EXPECT_EQ(r.pen, 0);
    WeightClassIndex idx(8);
    EXPECT_TRUE(is_wpb(BooleanFunction::from_hex(8, r.best_truth_table), idx));
    EXPECT_EQ(decode_weightwise(WeightwiseGenotype::parse(8, r.best_genotype), idx).to_hex(),
              r.best_truth_table);
  }
  const auto op = run(small(Algorithm::GaOp));
  EXPECT_EQ(op.penalty_computations, op.evaluations);
}

TEST(Run, GpGenotypeIsATree) {
  auto cfg = small(Algorithm::Gp);
  cfg.gp_use_if = false;
  const auto r = run(cfg);
  const auto tree = GpTree::parse(r.best_genotype);
  EXPECT_NO_THROW(tree.validate(8));
  for (const auto& node : tree.nodes()) EXPECT_NE(node.op, GpOp::If);
  auto f = evaluate_tree(tree, 8);
  normalize_endpoints(f.table());
  EXPECT_EQ(f.to_hex(), r.best_truth_table);
}

TEST(Run, RejectsInvalidConfig) {
  auto c = small(Algorithm::GaCb);
  c.n = 6;
  EXPECT_THROW(run(c), Error);
}
