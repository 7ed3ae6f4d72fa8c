#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/error.hpp"

namespace wpb {

// Packed bit vector. Bit i lives in word i/64 at position i%64. Bits past
// size() are always zero, so word-wise popcount and comparison are exact.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        v.set(i, true);
      } else if (bits[i] != '0') {
        throw_parse("invalid binary digit '" + std::string(1, bits[i]) + "'");
      }
    }
    return v;
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  bool operator[](std::size_t i) const noexcept { return get(i); }
  void set(std::size_t i, bool value) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= bit;
    } else {
      words_[i >> 6] &= ~bit;
    }
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void swap_bits(std::size_t i, std::size_t j) noexcept {
    const bool bi = get(i);
    set(i, get(j));
    set(j, bi);
  }

  std::size_t popcount() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  // Number of positions where *this and other differ; sizes must match.
  std::size_t distance(const BitVector& other) const noexcept {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      total += static_cast<std::size_t>(std::popcount(words_[w] ^ other.words_[w]));
    }
    return total;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  // Clears bits beyond size() after raw word manipulation.
  void trim() noexcept {
    if (size_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }
  }

  BitVector& operator^=(const BitVector& o) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  BitVector& operator&=(const BitVector& o) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  BitVector& operator|=(const BitVector& o) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  void invert() noexcept {
    for (auto& w : words_) w = ~w;
    trim();
  }

  std::string to_string() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if (get(i)) out[i] = '1';
    }
    return out;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::size_t hamming_weight(const BitVector& v) noexcept { return v.popcount(); }

inline std::size_t hamming_distance(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw_invalid("hamming_distance: size mismatch");
  return a.distance(b);
}

}  // namespace wpb
