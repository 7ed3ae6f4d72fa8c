#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wpb {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMaxSpaceVariables = 16;

struct SpaceSizes {
  int n = 0;
  BigInt all;       // 2^(2^n)
  BigInt balanced;  // C(2^n, 2^(n-1))
  // Product over k of C(C(n,k), C(n,k)/2); absent unless n is a power of 2.
  std::optional<BigInt> wpb;
};

BigInt big_binomial(unsigned n, unsigned k);

// Throws Error(Infeasible) when n is not a power of 2.
BigInt count_wpb(int n);
SpaceSizes space_sizes(int n);

// Decimal mantissa/exponent form rounded to `significant` digits, e.g. "5.18e70".
std::string scientific(const BigInt& value, int significant = 3);

}  // namespace wpb
