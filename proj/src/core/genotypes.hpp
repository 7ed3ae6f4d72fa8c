#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "core/bitvector.hpp"
#include "core/boolfun.hpp"

namespace wpb {

using Rng = std::mt19937_64;

// Forces f(0...0) = 0 and f(1...1) = 1.
void normalize_endpoints(BitVector& table);

struct TruthTableGenotype {
  int n = 0;
  BitVector bits;

  BooleanFunction phenotype() const { return BooleanFunction(n, bits); }
  friend bool operator==(const TruthTableGenotype&, const TruthTableGenotype&) = default;
};

// One balanced bit string per weight class E_{n,k}, k = 1..n-1. slice(k)
// holds f on E_{n,k} in lexicographic order.
class WeightwiseGenotype {
 public:
  // Validates slice lengths and perfect balance.
  WeightwiseGenotype(int n, std::vector<BitVector> slices);

  static WeightwiseGenotype parse(int n, std::string_view text);

  int n() const noexcept { return n_; }
  const BitVector& slice(int k) const { return slices_.at(k - 1); }
  const std::vector<BitVector>& slices() const noexcept { return slices_; }

  // "1001,101010,1001"
  std::string to_string() const;

  friend bool operator==(const WeightwiseGenotype&, const WeightwiseGenotype&) = default;

 private:
  friend class WeightwiseBuilder;
  struct Unchecked {};
  WeightwiseGenotype(Unchecked, int n, std::vector<BitVector> slices)
      : n_(n), slices_(std::move(slices)) {}

  int n_;
  std::vector<BitVector> slices_;
};

// Assembles genotypes from slices already known to be balanced; used by the
// weight-preserving operators.
class WeightwiseBuilder {
 public:
  static WeightwiseGenotype assemble(int n, std::vector<BitVector> slices) {
    return WeightwiseGenotype(WeightwiseGenotype::Unchecked{}, n, std::move(slices));
  }
};

BooleanFunction decode_weightwise(const WeightwiseGenotype& g, const WeightClassIndex& idx);
// Throws Error(InvalidArgument) if f is not WPB.
WeightwiseGenotype encode_weightwise(const BooleanFunction& f, const WeightClassIndex& idx);

enum class GpOp : std::uint8_t { Var, Not, Or, Xor, And, And2, Xnor, If };

int arity(GpOp op) noexcept;
std::string_view op_name(GpOp op) noexcept;

inline constexpr int kGpMaxDepth = 5;

struct GpNode {
  GpOp op;
  std::uint8_t var;  // 1-based variable index for Var nodes, 0 otherwise

  friend bool operator==(const GpNode&, const GpNode&) = default;
};

// Syntax tree stored in prefix order; the subtree rooted at node i occupies
// the contiguous range [i, subtree_end(i)). A lone leaf has depth 0.
class GpTree {
 public:
  GpTree() = default;
  explicit GpTree(std::vector<GpNode> nodes);

  // "IF(x1,XOR(x2,x3),x4)"
  static GpTree parse(std::string_view text);

  const std::vector<GpNode>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t subtree_end(std::size_t i) const;
  int depth() const;
  // Depth of node i below the root.
  std::vector<int> node_depths() const;
  std::vector<int> subtree_heights() const;
  int max_variable() const;

  GpTree subtree(std::size_t i) const;
  // Copy of *this with the subtree at i replaced by `replacement`.
  GpTree replace(std::size_t i, const GpTree& replacement) const;

  // Throws unless well formed with depth <= max_depth and variables in [1, n].
  void validate(int n, int max_depth = kGpMaxDepth) const;

  std::string to_string() const;

  friend bool operator==(const GpTree&, const GpTree&) = default;

 private:
  std::vector<GpNode> nodes_;
};

// Bit-parallel tree evaluation over all 2^n inputs with cached leaf tables.
class TreeEvaluator {
 public:
  explicit TreeEvaluator(int n);
  BooleanFunction evaluate(const GpTree& t);

 private:
  int n_;
  std::vector<BitVector> leaves_;
  std::vector<BitVector> stack_;
};

BooleanFunction evaluate_tree(const GpTree& t, int n);

TruthTableGenotype random_truth_table(int n, Rng& rng);
// Requires n a power of 2.
WeightwiseGenotype random_weightwise(int n, Rng& rng);
BitVector random_balanced(std::size_t length, Rng& rng);

// Grow (full = false) or full tree of exactly / at most `depth`.
GpTree random_tree_of_depth(int n, int depth, bool full, bool use_if, Rng& rng);
// Ramped half-and-half over depths 2..max_depth.
GpTree random_tree(int n, Rng& rng, bool use_if = true, int max_depth = kGpMaxDepth);

}  // namespace wpb
