#include <gtest/gtest.h>

#include "core/error.hpp"
#include "core/fitness.hpp"

using namespace wpb;

namespace {

constexpr const char* kWpb8 = "3940b7c580d6ca085eb88995be9aec732396d84257d372ae5ae231fe94b66d15";
constexpr const char* kRandom8 = "eedca20cca9c933ec720a07b5fba0e52ca26d9c13b6faee806bd0c3e1c46df95";

// WPB with f(~x) = 1 + f(x).
BooleanFunction anti_self_dual(Rng& rng) {
  const int n = 8;
  const std::uint32_t full = 255;
  BooleanFunction f(n);
  f.set(full, true);
  WeightClassIndex idx(n);
  for (int k = 1; k < n / 2; ++k) {
    const auto members = idx.members(k);
    const auto slice = random_balanced(members.size(), rng);
    for (std::size_t i = 0; i < members.size(); ++i) {
      f.set(members[i], slice.get(i));
      f.set(full ^ members[i], !slice.get(i));
    }
  }
  std::bernoulli_distribution coin(0.5);
  for (auto x : idx.members(n / 2)) {
    if (x < (full ^ x)) {
      const bool b = coin(rng);
      f.set(x, b);
      f.set(full ^ x, !b);
    }
  }
  return f;
}

}  // namespace

TEST(Fitness, Names) {
  EXPECT_EQ(parse_fitness("fit1"), FitnessKind::Fit1);
  EXPECT_EQ(parse_fitness("fit2"), FitnessKind::Fit2);
  EXPECT_EQ(fitness_name(FitnessKind::Fit2), "fit2");
  EXPECT_THROW(parse_fitness("fit3"), Error);
}

TEST(Fitness, FrozenValues) {
  FitnessEvaluator e(8);
  const auto w = BooleanFunction::from_hex(8, kWpb8);
  const auto v1 = e.fit1(w);
  EXPECT_EQ(v1.value, 7 + 18 + 23);
  EXPECT_EQ(v1.pen, 0);
  EXPECT_EQ(v1.nl_profile, (std::vector<int>{7, 18, 23}));
  EXPECT_EQ(e.fit2(w).value, 7);

  const auto r = e.fit1(BooleanFunction::from_hex(8, kRandom8));
  EXPECT_EQ(r.value, -16);
  EXPECT_EQ(r.pen, 16);
  EXPECT_TRUE(r.nl_profile.empty());
  EXPECT_EQ(e.fit2(BooleanFunction::from_hex(8, kRandom8)).value, -16);
  EXPECT_EQ(e.full_profile(w), (std::vector<int>{0, 7, 18, 23, 18, 7, 0}));
}

TEST(Fitness, SmallN) {
  FitnessEvaluator e(4);
  EXPECT_EQ(e.fit1(BooleanFunction::from_hex(4, "53a3")).value, 0);
  EXPECT_EQ(e.fit1(BooleanFunction::from_binary(4, "0000000000000001")).value, -7);
  EXPECT_THROW(FitnessEvaluator(6), Error);
}

TEST(Fitness, BalancedPathAgreesAndSkipsPenalty) {
  FitnessEvaluator e(8);
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_weightwise(8, rng);
    const auto f = decode_weightwise(g, e.index());
    for (auto kind : {FitnessKind::Fit1, FitnessKind::Fit2}) {
      const auto fast = e.evaluate_balanced(kind, g);
      const auto slow = e.evaluate(kind, f);
      ASSERT_EQ(fast.value, slow.value);
      ASSERT_EQ(fast.nl_profile, slow.nl_profile);
    }
  }
  FitnessEvaluator fresh(8);
  for (int t = 0; t < 25; ++t) fresh.evaluate_balanced(FitnessKind::Fit1, random_weightwise(8, rng));
  EXPECT_EQ(fresh.penalty_computations(), 0u);
  EXPECT_EQ(fresh.nonlinearity_computations(), 25u);
}

TEST(Fitness, GateOnlyComputesNonlinearityWhenBalanced) {
  FitnessEvaluator e(8);
  e.fit1(BooleanFunction::from_hex(8, kRandom8));
  EXPECT_EQ(e.penalty_computations(), 1u);
  EXPECT_EQ(e.nonlinearity_computations(), 0u);
  e.fit1(BooleanFunction::from_hex(8, kWpb8));
  EXPECT_EQ(e.penalty_computations(), 2u);
  EXPECT_EQ(e.nonlinearity_computations(), 1u);
}

TEST(Fitness, Bounds) {
  FitnessEvaluator e(8);
  Rng rng(2);
  for (int t = 0; t < 300; ++t) {
    const auto g = random_weightwise(8, rng);
    ASSERT_LE(e.evaluate_balanced(FitnessKind::Fit1, g).value, 11 + 24 + 30);
    ASSERT_LE(e.evaluate_balanced(FitnessKind::Fit2, g).value, 11);
    ASSERT_GE(e.evaluate_balanced(FitnessKind::Fit2, g).value, 0);
  }
}

TEST(Fitness, HalfRangeMatchesFullRangeOnAntiSelfDual) {
  FitnessEvaluator e(8);
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto f = anti_self_dual(rng);
    ASSERT_TRUE(is_wpb(f, e.index()));
    const auto full = e.full_profile(f);
    int long_way = 0;
    for (int k = 2; k <= 6; ++k) long_way += full[k - 1];
    const auto short_way = e.fit1(f).value;
    ASSERT_EQ(2 * short_way - full[3], long_way);
    for (int k = 1; k <= 3; ++k) ASSERT_EQ(full[k - 1], full[8 - k - 1]);
  }
}
