#include "core/oracle.hpp"

#include <algorithm>

namespace wpb {

namespace {

bool parity(std::uint32_t v) {
  bool p = false;
  for (; v; v &= v - 1) p = !p;
  return p;
}

int weight_of(std::uint32_t v) {
  int w = 0;
  for (; v; v >>= 1) w += v & 1;
  return w;
}

int min_affine_distance(const BooleanFunction& f, int k, bool whole_space) {
  const std::uint32_t size = std::uint32_t{1} << f.n();
  int best = -1;
  for (std::uint32_t a = 0; a < size; ++a) {
    for (int b = 0; b < 2; ++b) {
      int d = 0;
      for (std::uint32_t x = 0; x < size; ++x) {
        if (!whole_space && weight_of(x) != k) continue;
        const bool g = parity(a & x) != (b == 1);
        if (f(x) != g) ++d;
      }
      if (best < 0 || d < best) best = d;
    }
  }
  return best;
}

}  // namespace

int brute_force_restricted_nl(const BooleanFunction& f, int k) {
  check_restricted_weight(f.n(), k);
  return min_affine_distance(f, k, false);
}

int brute_force_nonlinearity(const BooleanFunction& f) { return min_affine_distance(f, 0, true); }

WpbCensus enumerate_wpb(int n) {
  if (n != 2 && n != 4) throw_invalid("exhaustive WPB census supports n = 2 or n = 4 only");
  const std::uint32_t size = std::uint32_t{1} << n;

  // Inputs of each weight in increasing (lexicographic) order.
  std::vector<std::vector<std::uint32_t>> inputs(n + 1);
  for (std::uint32_t x = 0; x < size; ++x) inputs[weight_of(x)].push_back(x);

  // Every balanced assignment per slice, as sorted 0/1 sequences.
  std::vector<std::vector<std::vector<std::uint8_t>>> choices(n - 1);
  for (int k = 1; k <= n - 1; ++k) {
    const std::size_t len = inputs[k].size();
    std::vector<std::uint8_t> bits(len, 0);
    std::fill(bits.begin() + static_cast<std::ptrdiff_t>(len / 2), bits.end(), 1);
    do choices[k - 1].push_back(bits);
    while (std::next_permutation(bits.begin(), bits.end()));
  }

  WpbCensus census;
  census.n = n;
  std::vector<std::size_t> odometer(n - 1, 0);
  for (;;) {
    BooleanFunction f(n);
    f.set(size - 1, true);
    for (int k = 1; k <= n - 1; ++k) {
      const auto& bits = choices[k - 1][odometer[k - 1]];
      for (std::size_t i = 0; i < bits.size(); ++i) f.set(inputs[k][i], bits[i] != 0);
    }
    CensusRow row;
    row.truth_table_hex = f.to_hex();
    for (int k = 1; k <= n - 1; ++k) row.nl.push_back(brute_force_restricted_nl(f, k));
    row.is_linear = std::all_of(row.nl.begin(), row.nl.end(), [](int v) { return v == 0; });
    ++census.total;
    if (row.is_linear) ++census.linear;
    ++census.profiles[row.nl];
    census.rows.push_back(std::move(row));

    std::size_t d = 0;
    while (d < odometer.size() && ++odometer[d] == choices[d].size()) odometer[d++] = 0;
    if (d == odometer.size()) break;
  }
  return census;
}

void write_census_csv(std::ostream& out, const WpbCensus& census) {
  out << "truth_table_hex,is_linear";
  for (int k = 1; k <= census.n - 1; ++k) out << ",nl_" << k;
  out << '\n';
  for (const auto& row : census.rows) {
    out << row.truth_table_hex << ',' << (row.is_linear ? 1 : 0);
    for (auto v : row.nl) out << ',' << v;
    out << '\n';
  }
}

}  // namespace wpb
