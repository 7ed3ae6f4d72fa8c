#include "core/spaces.hpp"

#include "core/boolfun.hpp"
#include "core/error.hpp"

namespace wpb {

namespace {

void check_space_n(int n) {
  if (n < 1 || n > kMaxSpaceVariables) {
    throw_invalid("n must be in [1, " + std::to_string(kMaxSpaceVariables) + "]");
  }
}

}  // namespace

BigInt big_binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt count_wpb(int n) {
  check_space_n(n);
  if (!wpb_feasible(n)) {
    throw_infeasible("WPB functions exist only when n is a power of 2, got " + std::to_string(n));
  }
  BigInt total = 1;
  for (int k = 1; k <= n - 1; ++k) {
    const auto size = static_cast<unsigned>(binomial(n, k));
    total *= big_binomial(size, size / 2);
  }
  return total;
}

SpaceSizes space_sizes(int n) {
  check_space_n(n);
  SpaceSizes s;
  s.n = n;
  const unsigned table_bits = 1u << n;
  s.all = BigInt(1) << table_bits;
  s.balanced = big_binomial(table_bits, table_bits / 2);
  if (wpb_feasible(n)) s.wpb = count_wpb(n);
  return s;
}

std::string scientific(const BigInt& value, int significant) {
  if (significant < 1) throw_invalid("significant digits must be positive");
  if (value < 0) return "-" + scientific(-value, significant);
  std::string digits = value.str();
  if (static_cast<int>(digits.size()) <= significant) {
    digits.append(significant - digits.size() + 1, '0');
  }
  int exponent = static_cast<int>(value.str().size()) - 1;
  std::string mantissa = digits.substr(0, significant);
  // Round half up on the next digit, carrying through nines.
  if (digits[significant] >= '5') {
    int i = significant - 1;
    while (i >= 0 && mantissa[i] == '9') mantissa[i--] = '0';
    if (i < 0) {
      mantissa.insert(mantissa.begin(), '1');
      mantissa.pop_back();
      ++exponent;
    } else {
      ++mantissa[i];
    }
  }
  std::string out(1, mantissa[0]);
  if (significant > 1) out += "." + mantissa.substr(1);
  return out + "e" + std::to_string(exponent);
}

}  // namespace wpb
