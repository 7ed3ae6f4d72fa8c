#include "core/engine.hpp"

#include <optional>

namespace wpb {

std::string_view algorithm_name(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::GaOp:
      return "ga-op";
    case Algorithm::GaCb:
      return "ga-cb";
    case Algorithm::GaMo:
      return "ga-mo";
    case Algorithm::Gp:
      return "gp";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::GaOp, Algorithm::GaCb, Algorithm::GaMo, Algorithm::Gp}) {
    if (algorithm_name(a) == name) return a;
  }
  throw_invalid("unknown algorithm '" + std::string(name) + "' (expected ga-op, ga-cb, ga-mo, gp)");
}

std::string_view swap_mode_name(SwapMode m) noexcept {
  return m == SwapMode::PerPosition ? "per-position" : "per-slice";
}

SwapMode parse_swap_mode(std::string_view name) {
  if (name == "per-position") return SwapMode::PerPosition;
  if (name == "per-slice") return SwapMode::PerSlice;
  throw_invalid("unknown swap mode '" + std::string(name) + "'");
}

RunConfig RunConfig::defaults(Algorithm algorithm, int n) {
  RunConfig c;
  c.algorithm = algorithm;
  c.n = n;
  c.population = algorithm == Algorithm::Gp ? kGpPopulation : kGaPopulation;
  c.p_mut = algorithm == Algorithm::Gp ? 0.9 : 0.1;
  return c;
}

void RunConfig::validate() const {
  if (n < 2 || n > RestrictedSignMatrix::kMaxVariables) {
    throw_invalid("n must be in [2, " + std::to_string(RestrictedSignMatrix::kMaxVariables) + "]");
  }
  if (!wpb_feasible(n)) {
    throw_infeasible("n must be a power of 2 for WPB search, got " + std::to_string(n));
  }
  if (population < 3) throw_invalid("population must hold at least 3 individuals");
  if (budget <= population) throw_invalid("evaluation budget must exceed the population size");
  if (!(p_mut >= 0.0 && p_mut <= 1.0)) throw_invalid("p_mut must be in [0, 1]");
  if (gp_max_depth < 1) throw_invalid("gp_max_depth must be positive");
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t run_index) noexcept {
  // Two SplitMix64 rounds over the pair.
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  return mix(mix(master_seed) ^ run_index);
}

std::size_t tournament_worst(std::span<const std::int64_t> fitness,
                             const std::array<std::size_t, 3>& drawn, Rng& rng) {
  std::int64_t worst = fitness[drawn[0]];
  for (auto i : drawn) worst = std::min(worst, fitness[i]);
  std::array<std::size_t, 3> tied{};
  std::size_t count = 0;
  for (std::size_t p = 0; p < drawn.size(); ++p) {
    if (fitness[drawn[p]] == worst) tied[count++] = p;
  }
  if (count == 1) return tied[0];
  return tied[std::uniform_int_distribution<std::size_t>(0, count - 1)(rng)];
}

namespace {

// One policy per encoding: initialization, breeding (crossover followed by
// mutation), evaluation and reporting.
class TruthTablePolicy {
 public:
  using Genotype = TruthTableGenotype;

  TruthTablePolicy(const RunConfig& c, FitnessEvaluator& e) : cfg_(c), eval_(e) {}

  Genotype random(Rng& rng) { return random_truth_table(cfg_.n, rng); }
  Genotype breed(const Genotype& a, const Genotype& b, Rng& rng) {
    return flip_mutation(one_point_crossover(a, b, rng), cfg_.p_mut, rng);
  }
  FitnessValue evaluate(const Genotype& g) { return eval_.evaluate(cfg_.fitness, g.bits); }
  std::string serialize(const Genotype& g) { return g.phenotype().to_hex(); }
  BooleanFunction phenotype(const Genotype& g) { return g.phenotype(); }

 private:
  const RunConfig& cfg_;
  FitnessEvaluator& eval_;
};

class WeightwisePolicy {
 public:
  using Genotype = WeightwiseGenotype;

  WeightwisePolicy(const RunConfig& c, FitnessEvaluator& e) : cfg_(c), eval_(e) {}

  Genotype random(Rng& rng) { return random_weightwise(cfg_.n, rng); }
  Genotype breed(const Genotype& a, const Genotype& b, Rng& rng) {
    Genotype child = cfg_.algorithm == Algorithm::GaCb ? counter_based_crossover(a, b, rng)
                                                       : map_of_ones_crossover(a, b, rng);
    return swap_mutation(child, cfg_.p_mut, rng, cfg_.swap_mode);
  }
  FitnessValue evaluate(const Genotype& g) { return eval_.evaluate_balanced(cfg_.fitness, g); }
  std::string serialize(const Genotype& g) { return g.to_string(); }
  BooleanFunction phenotype(const Genotype& g) { return decode_weightwise(g, eval_.index()); }

 private:
  const RunConfig& cfg_;
  FitnessEvaluator& eval_;
};

class TreePolicy {
 public:
  using Genotype = GpTree;

  TreePolicy(const RunConfig& c, FitnessEvaluator& e) : cfg_(c), eval_(e), trees_(c.n) {}

  Genotype random(Rng& rng) { return random_tree(cfg_.n, rng, cfg_.gp_use_if, cfg_.gp_max_depth); }
  Genotype breed(const Genotype& a, const Genotype& b, Rng& rng) {
    return subtree_mutation(gp_crossover(a, b, rng, cfg_.gp_max_depth), cfg_.p_mut, cfg_.n, rng,
                            cfg_.gp_use_if, cfg_.gp_max_depth);
  }
  FitnessValue evaluate(const Genotype& g) { return eval_.evaluate(cfg_.fitness, phenotype(g).table()); }
  std::string serialize(const Genotype& g) { return g.to_string(); }
  BooleanFunction phenotype(const Genotype& g) {
    BooleanFunction f = trees_.evaluate(g);
    normalize_endpoints(f.table());
    return f;
  }

 private:
  const RunConfig& cfg_;
  FitnessEvaluator& eval_;
  TreeEvaluator trees_;
};

template <class Policy>
RunResult steady_state(const RunConfig& cfg, FitnessEvaluator& eval, Policy policy) {
  using Genotype = typename Policy::Genotype;
  Rng rng(cfg.seed);
  RunResult result;
  result.config = cfg;

  std::vector<Genotype> population;
  std::vector<std::int64_t> fitness;
  population.reserve(cfg.population);
  fitness.reserve(cfg.population);

  std::optional<Genotype> best;
  FitnessValue best_value;
  std::uint64_t evaluations = 0;
  auto record = [&](const Genotype& g) {
    FitnessValue v = policy.evaluate(g);
    ++evaluations;
    if (!best || v.value > best_value.value) {
      best = g;
      best_value = v;
      result.trace.push_back({evaluations, v.value});
    }
    return v.value;
  };

  for (std::size_t i = 0; i < cfg.population; ++i) {
    population.push_back(policy.random(rng));
    fitness.push_back(record(population.back()));
  }

  std::uniform_int_distribution<std::size_t> pick(0, cfg.population - 1);
  while (evaluations < cfg.budget) {
    std::array<std::size_t, 3> drawn{};
    drawn[0] = pick(rng);
    do drawn[1] = pick(rng);
    while (drawn[1] == drawn[0]);
    do drawn[2] = pick(rng);
    while (drawn[2] == drawn[0] || drawn[2] == drawn[1]);

    const std::size_t worst = tournament_worst(fitness, drawn, rng);
    std::array<std::size_t, 2> parents{};
    for (std::size_t p = 0, j = 0; p < 3; ++p) {
      if (p != worst) parents[j++] = drawn[p];
    }
    Genotype child = policy.breed(population[parents[0]], population[parents[1]], rng);
    const std::size_t slot = drawn[worst];
    fitness[slot] = record(child);
    population[slot] = std::move(child);
  }

  const BooleanFunction f = policy.phenotype(*best);
  result.best_genotype = policy.serialize(*best);
  result.best_truth_table = f.to_hex();
  result.best_fitness = best_value.value;
  result.pen = best_value.pen;
  result.evaluations = evaluations;
  result.penalty_computations = eval.penalty_computations();
  result.nonlinearity_computations = eval.nonlinearity_computations();
  if (best_value.pen == 0) result.nl_profile = eval.full_profile(f);
  const AnfPolynomial poly = anf(f);
  result.anf_monomials = poly.monomial_count();
  result.degree = poly.degree();
  return result;
}

}  // namespace

RunResult run(const RunConfig& config) {
  config.validate();
  FitnessEvaluator eval(config.n);
  switch (config.algorithm) {
    case Algorithm::GaOp:
      return steady_state(config, eval, TruthTablePolicy(config, eval));
    case Algorithm::GaCb:
    case Algorithm::GaMo:
      return steady_state(config, eval, WeightwisePolicy(config, eval));
    case Algorithm::Gp:
      return steady_state(config, eval, TreePolicy(config, eval));
  }
  throw_invalid("unknown algorithm");
}

}  // namespace wpb
