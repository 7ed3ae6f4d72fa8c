#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "core/genotypes.hpp"

namespace wpb {

enum class SwapMode {
  PerPosition,  // every position independently triggers a swap with p_mut
  PerSlice,     // each slice triggers at most one swap with p_mut
};

struct OperatorConfig {
  double p_mut = 0.1;
  int gp_max_depth = kGpMaxDepth;
  bool gp_use_if = true;
  SwapMode swap_mode = SwapMode::PerPosition;
};

// Mutation rates used by the reproduction grid.
inline constexpr double kMutationGrid[] = {0.1, 0.3, 0.5, 0.7, 0.9};

// --- truth table -----------------------------------------------------------

// Child = a[0, cut) ++ b[cut, 2^n), endpoints normalized.
TruthTableGenotype one_point_crossover_at(const TruthTableGenotype& a, const TruthTableGenotype& b,
                                          std::size_t cut);
TruthTableGenotype one_point_crossover(const TruthTableGenotype& a, const TruthTableGenotype& b,
                                       Rng& rng);
TruthTableGenotype flip_mutation(const TruthTableGenotype& g, double p_mut, Rng& rng);

// --- weightwise balanced ---------------------------------------------------

// Per-slice kernels. `take_second` answers "copy from the second parent?" for
// the next decision, `pick_unused(count)` returns an index in [0, count).
BitVector counter_based_slice(const BitVector& a, const BitVector& b,
                              const std::function<bool()>& take_second);
BitVector map_of_ones_slice(const BitVector& a, const BitVector& b,
                            const std::function<bool()>& take_second,
                            const std::function<std::size_t(std::size_t)>& pick_unused);

WeightwiseGenotype counter_based_crossover(const WeightwiseGenotype& a, const WeightwiseGenotype& b,
                                           Rng& rng);
WeightwiseGenotype map_of_ones_crossover(const WeightwiseGenotype& a, const WeightwiseGenotype& b,
                                         Rng& rng);
WeightwiseGenotype swap_mutation(const WeightwiseGenotype& g, double p_mut, Rng& rng,
                                 SwapMode mode = SwapMode::PerPosition);

// --- GP ----------------------------------------------------------------------

enum class GpCrossover { Subtree, Uniform, SizeFair, OnePoint, ContextPreserving };
inline constexpr GpCrossover kGpCrossovers[] = {GpCrossover::Subtree, GpCrossover::Uniform,
                                                GpCrossover::SizeFair, GpCrossover::OnePoint,
                                                GpCrossover::ContextPreserving};

// Raw variant, no depth repair.
GpTree gp_crossover_variant(GpCrossover variant, const GpTree& a, const GpTree& b, Rng& rng);
// Picks a variant uniformly; children deeper than max_depth become a copy of a.
GpTree gp_crossover(const GpTree& a, const GpTree& b, Rng& rng, int max_depth = kGpMaxDepth);
GpTree subtree_mutation(const GpTree& t, double p_mut, int n, Rng& rng, bool use_if = true,
                        int max_depth = kGpMaxDepth);

}  // namespace wpb
