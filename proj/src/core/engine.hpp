#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/fitness.hpp"
#include "core/variation.hpp"

namespace wpb {

enum class Algorithm { GaOp, GaCb, GaMo, Gp };

std::string_view algorithm_name(Algorithm a) noexcept;
Algorithm parse_algorithm(std::string_view name);
std::string_view swap_mode_name(SwapMode m) noexcept;
SwapMode parse_swap_mode(std::string_view name);

inline constexpr std::uint64_t kDefaultBudget = 500000;
inline constexpr std::size_t kGaPopulation = 200;
inline constexpr std::size_t kGpPopulation = 1000;

struct RunConfig {
  Algorithm algorithm = Algorithm::GaCb;
  int n = 8;
  FitnessKind fitness = FitnessKind::Fit1;
  std::size_t population = kGaPopulation;
  double p_mut = 0.1;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  int run_id = 0;
  bool gp_use_if = true;
  int gp_max_depth = kGpMaxDepth;
  SwapMode swap_mode = SwapMode::PerPosition;

  // Population 200 for the GAs, 1000 for GP.
  static RunConfig defaults(Algorithm algorithm, int n = 8);
  void validate() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct TracePoint {
  std::uint64_t evaluation;  // 1-based index of the evaluation that set the record
  std::int64_t best_fitness;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct RunResult {
  RunConfig config;
  std::string best_genotype;
  std::string best_truth_table;  // hex
  std::int64_t best_fitness = 0;
  int pen = 0;
  // nl_1..nl_{n-1} of the best function; empty unless pen == 0.
  std::vector<int> nl_profile;
  std::size_t anf_monomials = 0;
  int degree = 0;
  std::uint64_t evaluations = 0;
  std::vector<TracePoint> trace;
  std::uint64_t penalty_computations = 0;
  std::uint64_t nonlinearity_computations = 0;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

// Independent per-run stream seed from (master seed, run index).
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t run_index) noexcept;

// Position (0..2) within `drawn` of the individual eliminated by a
// 3-tournament: lowest fitness, ties broken uniformly.
std::size_t tournament_worst(std::span<const std::int64_t> fitness,
                             const std::array<std::size_t, 3>& drawn, Rng& rng);

RunResult run(const RunConfig& config);

}  // namespace wpb
