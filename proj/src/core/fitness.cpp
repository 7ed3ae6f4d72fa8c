#include "core/fitness.hpp"

#include <algorithm>
#include <numeric>

namespace wpb {

std::string_view fitness_name(FitnessKind kind) noexcept {
  return kind == FitnessKind::Fit1 ? "fit1" : "fit2";
}

FitnessKind parse_fitness(std::string_view name) {
  if (name == "fit1") return FitnessKind::Fit1;
  if (name == "fit2") return FitnessKind::Fit2;
  throw_invalid("unknown fitness '" + std::string(name) + "' (expected fit1 or fit2)");
}

FitnessEvaluator::FitnessEvaluator(int n) : idx_(n) {
  if (!wpb_feasible(n)) {
    throw_infeasible("fitness needs n a power of 2, got " + std::to_string(n));
  }
  for (int k = 1; k <= n - 1; ++k) {
    matrices_.emplace_back(idx_, k);
    scratch_.emplace_back(idx_.class_size(k));
  }
}

int FitnessEvaluator::matrix_nonlinearity(int k, const BitVector& slice) const {
  return matrices_[k - 1].nonlinearity(slice);
}

const BitVector& FitnessEvaluator::gather(int k, const BitVector& table) {
  BitVector& slice = scratch_[k - 1];
  auto words = slice.words();
  std::fill(words.begin(), words.end(), 0);
  const auto members = idx_.members(k);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (table.get(members[i])) words[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  return slice;
}

FitnessValue FitnessEvaluator::combine(FitnessKind kind, std::vector<int> profile) const {
  FitnessValue v;
  if (!profile.empty()) {
    v.value = kind == FitnessKind::Fit1 ? std::accumulate(profile.begin(), profile.end(), std::int64_t{0})
                                        : *std::min_element(profile.begin(), profile.end());
  }
  v.nl_profile = std::move(profile);
  return v;
}

FitnessValue FitnessEvaluator::evaluate(FitnessKind kind, const BitVector& table) {
  if (table.size() != (std::size_t{1} << n())) throw_invalid("truth table length mismatch");
  ++penalty_computations_;
  int pen = 0;
  const auto t = table.words();
  for (int k = 1; k <= n() - 1; ++k) {
    const auto m = idx_.mask(k).words();
    int weight = 0;
    for (std::size_t w = 0; w < m.size(); ++w) weight += std::popcount(m[w] & t[w]);
    pen += std::abs(static_cast<int>(idx_.class_size(k)) - 2 * weight) / 2;
  }
  if (pen > 0) {
    FitnessValue v;
    v.value = -pen;
    v.pen = pen;
    return v;
  }
  ++nonlinearity_computations_;
  std::vector<int> profile;
  // Both fitness functions range over k in [2, n/2]; nl_1 is always 0.
  for (int k = 2; k <= n() / 2; ++k) profile.push_back(matrix_nonlinearity(k, gather(k, table)));
  return combine(kind, std::move(profile));
}

FitnessValue FitnessEvaluator::evaluate(FitnessKind kind, const BooleanFunction& f) {
  if (f.n() != n()) throw_invalid("function has a different n than the evaluator");
  return evaluate(kind, f.table());
}

FitnessValue FitnessEvaluator::evaluate_balanced(FitnessKind kind, const WeightwiseGenotype& g) {
  if (g.n() != n()) throw_invalid("genotype has a different n than the evaluator");
  ++nonlinearity_computations_;
  std::vector<int> profile;
  for (int k = 2; k <= n() / 2; ++k) profile.push_back(matrix_nonlinearity(k, g.slice(k)));
  return combine(kind, std::move(profile));
}

std::vector<int> FitnessEvaluator::full_profile(const BooleanFunction& f) {
  if (f.n() != n()) throw_invalid("function has a different n than the evaluator");
  std::vector<int> profile;
  for (int k = 1; k <= n() - 1; ++k) profile.push_back(matrix_nonlinearity(k, gather(k, f.table())));
  return profile;
}

}  // namespace wpb
