#include <gtest/gtest.h>

#include <sstream>

#include "core/error.hpp"
#include "core/genotypes.hpp"
#include "core/oracle.hpp"
#include "core/spaces.hpp"

using namespace wpb;

TEST(Oracle, FourVariableCensus) {
  const auto c = enumerate_wpb(4);
  EXPECT_EQ(c.total, 720u);
  EXPECT_EQ(c.rows.size(), 720u);
  EXPECT_EQ(c.linear, 288u);
  ASSERT_EQ(c.profiles.size(), 2u);
  EXPECT_EQ(c.profiles.at({0, 0, 0}), 288u);
  EXPECT_EQ(c.profiles.at({0, 1, 0}), 432u);
  EXPECT_EQ(BigInt(c.total), count_wpb(4));
}

TEST(Oracle, TwoVariableCensus) {
  const auto c = enumerate_wpb(2);
  EXPECT_EQ(c.total, 2u);
  EXPECT_EQ(c.rows[0].truth_table_hex, "3");
  EXPECT_EQ(c.rows[1].truth_table_hex, "5");
  EXPECT_THROW(enumerate_wpb(8), Error);
  EXPECT_THROW(enumerate_wpb(3), Error);
}

TEST(Oracle, CensusAgreesWithTransforms) {
  const auto c = enumerate_wpb(4);
  WeightClassIndex idx(4);
  for (const auto& row : c.rows) {
    const auto f = BooleanFunction::from_hex(4, row.truth_table_hex);
    ASSERT_TRUE(is_wpb(f, idx));
    for (int k = 1; k <= 3; ++k) ASSERT_EQ(restricted_nonlinearity(f, k, idx), row.nl[k - 1]);
  }
}

TEST(Oracle, Table1Restrictions) {
  const auto f = BooleanFunction::from_hex(4, "53a3");
  EXPECT_EQ(brute_force_restricted_nl(f, 2), 0);
  EXPECT_EQ(brute_force_restricted_nl(f, 3), 0);
  EXPECT_EQ(brute_force_nonlinearity(f), 4);
}

TEST(Oracle, CsvLayout) {
  const auto c = enumerate_wpb(4);
  std::ostringstream out;
  write_census_csv(out, c);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "truth_table_hex,is_linear,nl_1,nl_2,nl_3");
  std::size_t rows = 0, linear = 0;
  while (std::getline(in, line)) {
    ++rows;
    if (line.substr(5, 1) == "1") ++linear;
  }
  EXPECT_EQ(rows, 720u);
  EXPECT_EQ(linear, 288u);
}

TEST(Oracle, RandomEightVariableAgreement) {
  Rng rng(21);
  WeightClassIndex idx(8);
  for (int t = 0; t < 20; ++t) {
    BooleanFunction f(8);
    std::bernoulli_distribution coin(0.5);
    for (std::uint32_t x = 0; x < 256; ++x) f.set(x, coin(rng));
    for (int k = 1; k <= 4; ++k) {
      ASSERT_EQ(restricted_nonlinearity(f, k, idx), brute_force_restricted_nl(f, k));
    }
  }
}
