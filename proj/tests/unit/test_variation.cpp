#include <gtest/gtest.h>

#include <deque>

#include "core/error.hpp"
#include "core/variation.hpp"

using namespace wpb;

namespace {

BitVector bits(const char* s) { return BitVector::from_string(s); }

// Replays a fixed sequence of parent choices.
struct Script {
  std::deque<bool> coins;
  std::deque<std::size_t> picks;
  bool coin() {
    const bool c = coins.front();
    coins.pop_front();
    return c;
  }
  std::size_t pick(std::size_t) {
    const auto p = picks.front();
    picks.pop_front();
    return p;
  }
};

}  // namespace

TEST(OnePoint, CutAndNormalize) {
  const TruthTableGenotype a{4, bits("0000000000000000")};
  const TruthTableGenotype b{4, bits("1111111111111111")};
  EXPECT_EQ(one_point_crossover_at(a, b, 8).bits.to_string(), "0000000011111111");
  // Cut 1 takes b's bit 0; normalization restores it.
  EXPECT_EQ(one_point_crossover_at(a, b, 1).bits.to_string(), "0111111111111111");
  Rng rng(1);
  EXPECT_EQ(one_point_crossover(a, a, rng).bits.get(0), false);
  EXPECT_EQ(one_point_crossover(a, a, rng).bits.get(15), true);
}

TEST(OnePoint, ChildBitsComeFromParents) {
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_truth_table(6, rng);
    const auto b = random_truth_table(6, rng);
    const auto c = one_point_crossover(a, b, rng);
    for (std::size_t i = 1; i + 1 < 64; ++i) {
      ASSERT_TRUE(c.bits.get(i) == a.bits.get(i) || c.bits.get(i) == b.bits.get(i));
    }
  }
}

TEST(FlipMutation, Rates) {
  Rng rng(3);
  const auto g = random_truth_table(8, rng);
  EXPECT_EQ(flip_mutation(g, 0.0, rng), g);
  for (int t = 0; t < 200; ++t) {
    ASSERT_LE(hamming_distance(flip_mutation(g, 1.0, rng).bits, g.bits), 1u);
  }
  // Flipping the last position is undone by normalization.
  TruthTableGenotype h{4, bits("0101001110100011")};
  h.bits.flip(15);
  normalize_endpoints(h.bits);
  EXPECT_TRUE(h.bits.get(15));
}

TEST(CounterBased, ScriptedTrace) {
  Script s{{false, true, false}, {}};
  const auto child = counter_based_slice(bits("1100"), bits("0011"), [&] { return s.coin(); });
  EXPECT_EQ(child.to_string(), "1001");
  EXPECT_TRUE(s.coins.empty());
}

TEST(CounterBased, IdenticalParents) {
  Rng rng(4);
  const auto a = random_weightwise(8, rng);
  EXPECT_EQ(counter_based_crossover(a, a, rng), a);
  EXPECT_EQ(map_of_ones_crossover(a, a, rng), a);
}

TEST(MapOfOnes, ScriptedTrace) {
  Script s{{false, true}, {}};
  const auto child = map_of_ones_slice(bits("1100"), bits("0011"), [&] { return s.coin(); },
                                       [&](std::size_t c) { return s.pick(c); });
  EXPECT_EQ(child.to_string(), "1001");
}

TEST(MapOfOnes, CollisionFallsBackToUnused) {
  // Slot 1 takes position 1 from b, slot 2 takes position 1 again from a: the
  // fallback picks the second position still at zero, which is 2.
  Script s{{true, false}, {1}};
  const auto child = map_of_ones_slice(bits("1100"), bits("0110"), [&] { return s.coin(); },
                                       [&](std::size_t c) { return s.pick(c); });
  EXPECT_EQ(child.to_string(), "0110");
  EXPECT_TRUE(s.picks.empty());
}

TEST(SwapMutation, ScriptedAndRates) {
  BitVector s = bits("1001");
  s.swap_bits(0, 1);
  EXPECT_EQ(s.to_string(), "0101");
  Rng rng(5);
  const auto g = random_weightwise(8, rng);
  EXPECT_EQ(swap_mutation(g, 0.0, rng), g);
  EXPECT_EQ(swap_mutation(g, 0.0, rng, SwapMode::PerSlice), g);
  // One swap per slice at most in per-slice mode.
  for (int t = 0; t < 100; ++t) {
    const auto m = swap_mutation(g, 1.0, rng, SwapMode::PerSlice);
    for (int k = 1; k < 8; ++k) ASSERT_LE(hamming_distance(m.slice(k), g.slice(k)), 2u);
  }
}

TEST(Balanced, ClosureOnTenThousandOffspring) {
  Rng rng(6);
  WeightClassIndex idx(8);
  for (int t = 0; t < 10000; ++t) {
    const auto a = random_weightwise(8, rng);
    const auto b = random_weightwise(8, rng);
    const auto cb = counter_based_crossover(a, b, rng);
    const auto mo = map_of_ones_crossover(a, b, rng);
    const auto mode = t % 2 ? SwapMode::PerSlice : SwapMode::PerPosition;
    const auto sw = swap_mutation(cb, 0.1 + 0.8 * (t % 5) / 4.0, rng, mode);
    for (const auto* g : {&cb, &mo, &sw}) {
      ASSERT_TRUE(is_wpb(decode_weightwise(*g, idx), idx));
      // Re-validates through the checked constructor.
      ASSERT_NO_THROW(WeightwiseGenotype(8, g->slices()));
    }
  }
}

TEST(Balanced, Deterministic) {
  Rng seed_a(9), seed_b(9);
  Rng r(7);
  const auto a = random_weightwise(8, r);
  const auto b = random_weightwise(8, r);
  EXPECT_EQ(counter_based_crossover(a, b, seed_a), counter_based_crossover(a, b, seed_b));
  EXPECT_EQ(map_of_ones_crossover(a, b, seed_a), map_of_ones_crossover(a, b, seed_b));
  EXPECT_EQ(swap_mutation(a, 0.3, seed_a), swap_mutation(a, 0.3, seed_b));
}

TEST(Balanced, MismatchedParents) {
  Rng rng(8);
  const auto a = random_weightwise(4, rng);
  const auto b = random_weightwise(8, rng);
  EXPECT_THROW(counter_based_crossover(a, b, rng), Error);
  EXPECT_THROW(map_of_ones_crossover(a, b, rng), Error);
}

TEST(GpVariation, DepthCapAndIdentity) {
  Rng rng(10);
  for (int t = 0; t < 2000; ++t) {
    const auto a = random_tree(8, rng);
    const auto b = random_tree(8, rng);
    const auto c = gp_crossover(a, b, rng);
    ASSERT_NO_THROW(c.validate(8, kGpMaxDepth));
    const auto m = subtree_mutation(c, 0.9, 8, rng);
    ASSERT_NO_THROW(m.validate(8, kGpMaxDepth));
    ASSERT_EQ(subtree_mutation(c, 0.0, 8, rng), c);
  }
}

TEST(GpVariation, EveryVariantRuns) {
  Rng rng(11);
  for (auto v : kGpCrossovers) {
    for (int t = 0; t < 300; ++t) {
      const auto a = random_tree(6, rng);
      const auto b = random_tree(6, rng);
      const auto c = gp_crossover_variant(v, a, b, rng);
      ASSERT_NO_THROW(c.validate(6, 64));
    }
    // Identical parents stay identical under the common-region variants.
    const auto a = random_tree(6, rng);
    if (v == GpCrossover::Uniform || v == GpCrossover::OnePoint) {
      EXPECT_EQ(gp_crossover_variant(v, a, a, rng), a);
    }
  }
}

TEST(GpVariation, DepthRepairCopiesFirstParent) {
  // Any child deeper than the cap is replaced by parent a.
  Rng rng(12);
  const auto a = GpTree::parse("AND(x1,x2)");
  const auto b = GpTree::parse("OR(OR(OR(x1,x2),x3),x4)");
  for (int t = 0; t < 200; ++t) {
    const auto c = gp_crossover(a, b, rng, 1);
    ASSERT_LE(c.depth(), 1);
  }
}
