#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "core/boolfun.hpp"
#include "core/genotypes.hpp"

namespace wpb {

enum class FitnessKind { Fit1, Fit2 };

std::string_view fitness_name(FitnessKind kind) noexcept;
FitnessKind parse_fitness(std::string_view name);

struct FitnessValue {
  // -pen while unbalanced; otherwise the sum (fit1) or minimum (fit2) of nl_k.
  std::int64_t value = 0;
  int pen = 0;
  // nl_k for k = 2..n/2 in order; empty when pen > 0.
  std::vector<int> nl_profile;
};

// Evaluates fit1/fit2 for one n. Holds precomputed sign matrices and scratch
// space, so one evaluator per thread.
class FitnessEvaluator {
 public:
  explicit FitnessEvaluator(int n);

  int n() const noexcept { return idx_.n(); }
  const WeightClassIndex& index() const noexcept { return idx_; }

  FitnessValue fit1(const BooleanFunction& f) { return evaluate(FitnessKind::Fit1, f); }
  FitnessValue fit2(const BooleanFunction& f) { return evaluate(FitnessKind::Fit2, f); }
  FitnessValue evaluate(FitnessKind kind, const BooleanFunction& f);
  FitnessValue evaluate(FitnessKind kind, const BitVector& table);

  // Weightwise genotypes are WPB by construction: the penalty is skipped and
  // the slices feed the restricted transforms directly.
  FitnessValue evaluate_balanced(FitnessKind kind, const WeightwiseGenotype& g);

  // nl_1..nl_{n-1}, through the bit-parallel transform.
  std::vector<int> full_profile(const BooleanFunction& f);

  std::uint64_t penalty_computations() const noexcept { return penalty_computations_; }
  std::uint64_t nonlinearity_computations() const noexcept { return nonlinearity_computations_; }

 private:
  int matrix_nonlinearity(int k, const BitVector& slice) const;
  const BitVector& gather(int k, const BitVector& table);
  FitnessValue combine(FitnessKind kind, std::vector<int> profile) const;

  WeightClassIndex idx_;
  std::vector<RestrictedSignMatrix> matrices_;  // k = 1..n-1
  std::vector<BitVector> scratch_;
  std::uint64_t penalty_computations_ = 0;
  std::uint64_t nonlinearity_computations_ = 0;
};

}  // namespace wpb
