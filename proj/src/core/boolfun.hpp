#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/bitvector.hpp"

namespace wpb {

inline constexpr int kMaxVariables = 16;

// Truth table of an n-variable Boolean function. Table index i encodes the
// input x = (x_1, ..., x_n) with x_1 as the most significant bit, so the
// table lists inputs in lexicographic order.
class BooleanFunction {
 public:
  explicit BooleanFunction(int n);
  BooleanFunction(int n, BitVector table);

  // Binary strings carry f(0...0) as the first character. Hex strings use
  // four table bits per digit in the same order, first bit as the digit MSB.
  static BooleanFunction from_binary(int n, std::string_view bits);
  static BooleanFunction from_hex(int n, std::string_view hex);
  // Accepts either form, decided by length.
  static BooleanFunction parse(int n, std::string_view text);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return table_.size(); }
  bool operator()(std::uint32_t x) const noexcept { return table_.get(x); }
  void set(std::uint32_t x, bool value) noexcept { table_.set(x, value); }
  const BitVector& table() const noexcept { return table_; }
  BitVector& table() noexcept { return table_; }

  std::string to_binary() const { return table_.to_string(); }
  std::string to_hex() const;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int n_;
  BitVector table_;
};

void check_variable_count(int n);

// x_1..x_n of table index i, and back.
std::vector<std::uint8_t> input_vector(int n, std::uint32_t index);
std::uint32_t input_index(std::span<const std::uint8_t> bits);

// Parity of a·x.
inline bool dot(std::uint32_t a, std::uint32_t x) noexcept { return std::popcount(a & x) & 1; }

std::uint64_t binomial(int n, int k);

// Inputs of each Hamming weight k in lexicographic order, with the inverse map.
class WeightClassIndex {
 public:
  struct Position {
    int weight;
    std::uint32_t offset;
  };

  explicit WeightClassIndex(int n);

  int n() const noexcept { return n_; }
  std::span<const std::uint32_t> members(int k) const { return classes_.at(k); }
  std::size_t class_size(int k) const { return classes_.at(k).size(); }
  Position position(std::uint32_t x) const { return positions_.at(x); }
  // Truth-table mask with ones exactly at E_{n,k}.
  const BitVector& mask(int k) const { return masks_.at(k); }

  // f restricted to E_{n,k}, as a bit string in class order.
  BitVector restriction(const BooleanFunction& f, int k) const;

 private:
  int n_;
  std::vector<std::vector<std::uint32_t>> classes_;
  std::vector<Position> positions_;
  std::vector<BitVector> masks_;
};

struct WalshSpectrum {
  int n = 0;
  std::vector<std::int32_t> coefficients;

  std::int32_t max_abs() const;
};

struct RestrictedSpectrum {
  int n = 0;
  int k = 0;
  std::vector<std::int32_t> coefficients;

  std::int32_t max_abs() const;
};

struct AnfPolynomial {
  int n = 0;
  // Entry I (bit n-i set iff x_i is in the monomial) holds a_I.
  BitVector coefficients;

  std::size_t monomial_count() const { return coefficients.popcount(); }
  int degree() const;
  std::string to_string() const;
};

WalshSpectrum walsh_spectrum(const BooleanFunction& f);
WalshSpectrum walsh_spectrum_naive(const BooleanFunction& f);

int nonlinearity(const BooleanFunction& f);
int nonlinearity(const WalshSpectrum& spectrum);

// Covering-radius bound 2^(n-1) - 2^(n/2-1), floored for odd n.
int covering_radius_bound(int n);

void check_restricted_weight(int n, int k);

RestrictedSpectrum restricted_spectrum(const BooleanFunction& f, int k, const WeightClassIndex& idx);
std::int32_t restricted_coefficient(const BooleanFunction& f, int k, std::uint32_t a,
                                    const WeightClassIndex& idx);

// Precomputed rows of (a·x) for x in E_{n,k}, packed so that a restricted
// coefficient is |E| - 2·popcount(slice XOR row_a).
class RestrictedSignMatrix {
 public:
  static constexpr int kMaxVariables = 14;

  RestrictedSignMatrix(const WeightClassIndex& idx, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t class_size() const noexcept { return class_size_; }

  RestrictedSpectrum spectrum(const BitVector& slice) const;
  std::int32_t max_abs(const BitVector& slice) const;
  int nonlinearity(const BitVector& slice) const;

 private:
  std::int32_t coefficient(std::size_t row, std::span<const std::uint64_t> slice) const {
    const std::uint64_t* r = rows_.data() + row * words_per_row_;
    int differ = 0;
    for (std::size_t w = 0; w < words_per_row_; ++w) differ += std::popcount(r[w] ^ slice[w]);
    return static_cast<std::int32_t>(class_size_) - 2 * differ;
  }

  int n_;
  int k_;
  std::size_t class_size_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> rows_;
};

RestrictedSpectrum restricted_spectrum_bitparallel(const BooleanFunction& f,
                                                   const RestrictedSignMatrix& matrix,
                                                   const WeightClassIndex& idx);

int restricted_nonlinearity(const BooleanFunction& f, int k, const WeightClassIndex& idx);
int restricted_nonlinearity(const RestrictedSpectrum& spectrum);

int restricted_bound(int n, int k);

// Möbius transform; it is its own inverse.
BitVector mobius_transform(const BitVector& v);
AnfPolynomial anf(const BooleanFunction& f);
int algebraic_degree(const BooleanFunction& f);

int restricted_weight(const BooleanFunction& f, int k, const WeightClassIndex& idx);
int unbalancedness(const BooleanFunction& f, int k, const WeightClassIndex& idx);
int penalty(const BooleanFunction& f, const WeightClassIndex& idx);
bool is_wpb(const BooleanFunction& f, const WeightClassIndex& idx);

bool wpb_feasible(int n) noexcept;

}  // namespace wpb
