#include "core/boolfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace wpb {

void check_variable_count(int n) {
  if (n < 1 || n > kMaxVariables) {
    throw_invalid("variable count must be in [1, " + std::to_string(kMaxVariables) + "], got " +
                  std::to_string(n));
  }
}

BooleanFunction::BooleanFunction(int n) : n_(n) {
  check_variable_count(n);
  table_ = BitVector(std::size_t{1} << n);
}

BooleanFunction::BooleanFunction(int n, BitVector table) : n_(n), table_(std::move(table)) {
  check_variable_count(n);
  if (table_.size() != (std::size_t{1} << n)) {
    throw_invalid("truth table length " + std::to_string(table_.size()) + " does not match 2^" +
                  std::to_string(n));
  }
}

BooleanFunction BooleanFunction::from_binary(int n, std::string_view bits) {
  check_variable_count(n);
  if (bits.size() != (std::size_t{1} << n)) {
    throw_parse("binary truth table must have " + std::to_string(std::size_t{1} << n) +
                " digits, got " + std::to_string(bits.size()));
  }
  return BooleanFunction(n, BitVector::from_string(bits));
}

BooleanFunction BooleanFunction::from_hex(int n, std::string_view hex) {
  check_variable_count(n);
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (n < 2) throw_parse("hex truth tables need n >= 2");
  const std::size_t digits = (std::size_t{1} << n) / 4;
  if (hex.size() != digits) {
    throw_parse("hex truth table must have " + std::to_string(digits) + " digits, got " +
                std::to_string(hex.size()));
  }
  BooleanFunction f(n);
  for (std::size_t d = 0; d < digits; ++d) {
    const char c = hex[d];
    int v;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      v = c - 'A' + 10;
    } else {
      throw_parse("invalid hex digit '" + std::string(1, c) + "'");
    }
    for (int b = 0; b < 4; ++b) {
      f.set(static_cast<std::uint32_t>(4 * d + b), (v >> (3 - b)) & 1);
    }
  }
  return f;
}

BooleanFunction BooleanFunction::parse(int n, std::string_view text) {
  check_variable_count(n);
  if (text.size() == (std::size_t{1} << n)) return from_binary(n, text);
  return from_hex(n, text);
}

std::string BooleanFunction::to_hex() const {
  if (n_ < 2) throw_invalid("hex truth tables need n >= 2");
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(size() / 4, '0');
  for (std::size_t d = 0; d < out.size(); ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) v = (v << 1) | (table_.get(4 * d + b) ? 1 : 0);
    out[d] = kDigits[v];
  }
  return out;
}

std::vector<std::uint8_t> input_vector(int n, std::uint32_t index) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bits[i] = (index >> (n - 1 - i)) & 1;
  return bits;
}

std::uint32_t input_index(std::span<const std::uint8_t> bits) {
  std::uint32_t index = 0;
  for (auto b : bits) index = (index << 1) | (b & 1u);
  return index;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

WeightClassIndex::WeightClassIndex(int n) : n_(n) {
  check_variable_count(n);
  const std::uint32_t size = std::uint32_t{1} << n;
  classes_.resize(n + 1);
  positions_.resize(size);
  masks_.assign(n + 1, BitVector(size));
  // Ascending integers are lexicographic order under the x_1-is-MSB encoding.
  for (std::uint32_t x = 0; x < size; ++x) {
    const int w = std::popcount(x);
    positions_[x] = {w, static_cast<std::uint32_t>(classes_[w].size())};
    classes_[w].push_back(x);
    masks_[w].set(x, true);
  }
}

BitVector WeightClassIndex::restriction(const BooleanFunction& f, int k) const {
  const auto& m = classes_.at(k);
  BitVector slice(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (f(m[i])) slice.set(i, true);
  }
  return slice;
}

namespace {

std::int32_t max_abs_of(const std::vector<std::int32_t>& c) {
  std::int32_t best = 0;
  for (auto v : c) best = std::max(best, std::abs(v));
  return best;
}

}  // namespace

std::int32_t WalshSpectrum::max_abs() const { return max_abs_of(coefficients); }
std::int32_t RestrictedSpectrum::max_abs() const { return max_abs_of(coefficients); }

WalshSpectrum walsh_spectrum(const BooleanFunction& f) {
  const std::size_t size = f.size();
  WalshSpectrum s{f.n(), std::vector<std::int32_t>(size)};
  auto& w = s.coefficients;
  for (std::size_t x = 0; x < size; ++x) w[x] = f(static_cast<std::uint32_t>(x)) ? -1 : 1;
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t j = block; j < block + half; ++j) {
        const std::int32_t u = w[j];
        const std::int32_t v = w[j + half];
        w[j] = u + v;
        w[j + half] = u - v;
      }
    }
  }
  return s;
}

WalshSpectrum walsh_spectrum_naive(const BooleanFunction& f) {
  const std::uint32_t size = static_cast<std::uint32_t>(f.size());
  WalshSpectrum s{f.n(), std::vector<std::int32_t>(size)};
  for (std::uint32_t a = 0; a < size; ++a) {
    std::int32_t sum = 0;
    for (std::uint32_t x = 0; x < size; ++x) sum += (f(x) ^ dot(a, x)) ? -1 : 1;
    s.coefficients[a] = sum;
  }
  return s;
}

int nonlinearity(const WalshSpectrum& spectrum) {
  return (1 << (spectrum.n - 1)) - spectrum.max_abs() / 2;
}

int nonlinearity(const BooleanFunction& f) { return nonlinearity(walsh_spectrum(f)); }

int covering_radius_bound(int n) {
  check_variable_count(n);
  const double bound = std::ldexp(1.0, n - 1) - std::pow(2.0, n / 2.0 - 1);
  return static_cast<int>(std::floor(bound));
}

void check_restricted_weight(int n, int k) {
  if (k < 1 || k > n - 1) {
    throw_invalid("weight k must be in [1, " + std::to_string(n - 1) + "], got " +
                  std::to_string(k));
  }
}

std::int32_t restricted_coefficient(const BooleanFunction& f, int k, std::uint32_t a,
                                    const WeightClassIndex& idx) {
  check_restricted_weight(f.n(), k);
  std::int32_t sum = 0;
  for (auto x : idx.members(k)) sum += (f(x) ^ dot(a, x)) ? -1 : 1;
  return sum;
}

RestrictedSpectrum restricted_spectrum(const BooleanFunction& f, int k,
                                       const WeightClassIndex& idx) {
  check_restricted_weight(f.n(), k);
  if (idx.n() != f.n()) throw_invalid("weight class index built for a different n");
  const std::uint32_t size = static_cast<std::uint32_t>(f.size());
  RestrictedSpectrum s{f.n(), k, std::vector<std::int32_t>(size)};
  const auto members = idx.members(k);
  for (std::uint32_t a = 0; a < size; ++a) {
    std::int32_t sum = 0;
    for (auto x : members) sum += (f(x) ^ dot(a, x)) ? -1 : 1;
    s.coefficients[a] = sum;
  }
  return s;
}

RestrictedSignMatrix::RestrictedSignMatrix(const WeightClassIndex& idx, int k)
    : n_(idx.n()), k_(k), class_size_(idx.class_size(k)) {
  check_restricted_weight(n_, k);
  if (n_ > kMaxVariables) {
    throw_invalid("sign matrix limited to n <= " + std::to_string(kMaxVariables));
  }
  words_per_row_ = (class_size_ + 63) / 64;
  const std::uint32_t size = std::uint32_t{1} << n_;
  rows_.assign(static_cast<std::size_t>(size) * words_per_row_, 0);
  const auto members = idx.members(k);
  for (std::uint32_t a = 0; a < size; ++a) {
    std::uint64_t* row = rows_.data() + static_cast<std::size_t>(a) * words_per_row_;
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (dot(a, members[j])) row[j >> 6] |= std::uint64_t{1} << (j & 63);
    }
  }
}

RestrictedSpectrum RestrictedSignMatrix::spectrum(const BitVector& slice) const {
  if (slice.size() != class_size_) throw_invalid("slice length does not match E_{n,k}");
  const std::size_t size = std::size_t{1} << n_;
  RestrictedSpectrum s{n_, k_, std::vector<std::int32_t>(size)};
  for (std::size_t a = 0; a < size; ++a) s.coefficients[a] = coefficient(a, slice.words());
  return s;
}

std::int32_t RestrictedSignMatrix::max_abs(const BitVector& slice) const {
  if (slice.size() != class_size_) throw_invalid("slice length does not match E_{n,k}");
  // On E_{n,k}, (ā)·x = a·x ⊕ (k mod 2), so |W(ā)| = |W(a)| and the half of
  // the a's with x_1 = 0 already covers every magnitude.
  const std::size_t half = std::size_t{1} << (n_ - 1);
  const auto words = slice.words();
  std::int32_t best = 0;
  for (std::size_t a = 0; a < half; ++a) best = std::max(best, std::abs(coefficient(a, words)));
  return best;
}

int RestrictedSignMatrix::nonlinearity(const BitVector& slice) const {
  return (static_cast<int>(class_size_) - max_abs(slice)) / 2;
}

RestrictedSpectrum restricted_spectrum_bitparallel(const BooleanFunction& f,
                                                   const RestrictedSignMatrix& matrix,
                                                   const WeightClassIndex& idx) {
  if (idx.n() != f.n() || matrix.n() != f.n()) {
    throw_invalid("sign matrix built for a different n");
  }
  return matrix.spectrum(idx.restriction(f, matrix.k()));
}

int restricted_nonlinearity(const RestrictedSpectrum& spectrum) {
  const int size = static_cast<int>(binomial(spectrum.n, spectrum.k));
  return (size - spectrum.max_abs()) / 2;
}

int restricted_nonlinearity(const BooleanFunction& f, int k, const WeightClassIndex& idx) {
  return restricted_nonlinearity(restricted_spectrum(f, k, idx));
}

int restricted_bound(int n, int k) {
  check_variable_count(n);
  check_restricted_weight(n, k);
  // floor((C - sqrt(C)) / 2) in integers: with s = isqrt(C), sqrt(C) is s on
  // perfect squares and strictly inside (s, s+1) otherwise.
  const auto c = static_cast<std::int64_t>(binomial(n, k));
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(c)));
  while (s * s > c) --s;
  while ((s + 1) * (s + 1) <= c) ++s;
  if (s * s == c) return static_cast<int>((c - s) / 2);
  const std::int64_t diff = c - s;
  return static_cast<int>(diff % 2 == 0 ? diff / 2 - 1 : (diff - 1) / 2);
}

BitVector mobius_transform(const BitVector& v) {
  BitVector out = v;
  const std::size_t size = v.size();
  for (std::size_t bit = 1; bit < size; bit <<= 1) {
    for (std::size_t i = 0; i < size; ++i) {
      if ((i & bit) && out.get(i ^ bit)) out.flip(i);
    }
  }
  return out;
}

AnfPolynomial anf(const BooleanFunction& f) { return {f.n(), mobius_transform(f.table())}; }

int AnfPolynomial::degree() const {
  int best = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients.get(i)) best = std::max(best, std::popcount(static_cast<std::uint32_t>(i)));
  }
  return best;
}

std::string AnfPolynomial::to_string() const {
  std::vector<std::uint32_t> monomials;
  for (std::uint32_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients.get(i)) monomials.push_back(i);
  }
  if (monomials.empty()) return "0";
  // Constant first, then by degree, then lexicographically on variable lists.
  std::stable_sort(monomials.begin(), monomials.end(), [](std::uint32_t a, std::uint32_t b) {
    const int da = std::popcount(a), db = std::popcount(b);
    return da != db ? da < db : a > b;
  });
  std::string out;
  for (auto m : monomials) {
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += "1";
      continue;
    }
    for (int i = 1; i <= n; ++i) {
      if ((m >> (n - i)) & 1) out += "x" + std::to_string(i);
    }
  }
  return out;
}

int algebraic_degree(const BooleanFunction& f) { return anf(f).degree(); }

int restricted_weight(const BooleanFunction& f, int k, const WeightClassIndex& idx) {
  const auto size = static_cast<std::int32_t>(idx.class_size(k));
  return (size - restricted_coefficient(f, k, 0, idx)) / 2;
}

int unbalancedness(const BooleanFunction& f, int k, const WeightClassIndex& idx) {
  check_restricted_weight(f.n(), k);
  const auto size = static_cast<int>(idx.class_size(k));
  int weight = 0;
  const auto m = idx.mask(k).words();
  const auto t = f.table().words();
  for (std::size_t i = 0; i < m.size(); ++i) weight += std::popcount(m[i] & t[i]);
  // Odd class sizes (n not a power of 2) round down to the near-balanced distance.
  return std::abs(size - 2 * weight) / 2;
}

int penalty(const BooleanFunction& f, const WeightClassIndex& idx) {
  int pen = 0;
  for (int k = 1; k <= f.n() - 1; ++k) pen += unbalancedness(f, k, idx);
  return pen;
}

bool wpb_feasible(int n) noexcept { return n >= 1 && std::has_single_bit(static_cast<unsigned>(n)); }

bool is_wpb(const BooleanFunction& f, const WeightClassIndex& idx) {
  if (!wpb_feasible(f.n())) return false;
  const auto last = static_cast<std::uint32_t>(f.size() - 1);
  return !f(0) && f(last) && penalty(f, idx) == 0;
}

}  // namespace wpb
