#include "core/persist.hpp"

#include <json.hpp>

namespace wpb {

using nlohmann::json;

namespace {

json config_json(const RunConfig& c) {
  return {
      {"algorithm", algorithm_name(c.algorithm)},
      {"n", c.n},
      {"fitness", fitness_name(c.fitness)},
      {"population", c.population},
      {"p_mut", c.p_mut},
      {"budget", c.budget},
      {"seed", c.seed},
      {"run_id", c.run_id},
      {"gp_use_if", c.gp_use_if},
      {"gp_max_depth", c.gp_max_depth},
      {"swap_mode", swap_mode_name(c.swap_mode)},
  };
}

RunConfig config_from(const json& j) {
  RunConfig c;
  c.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
  c.n = j.at("n").get<int>();
  c.fitness = parse_fitness(j.at("fitness").get<std::string>());
  c.population = j.at("population").get<std::size_t>();
  c.p_mut = j.at("p_mut").get<double>();
  c.budget = j.at("budget").get<std::uint64_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.run_id = j.at("run_id").get<int>();
  c.gp_use_if = j.at("gp_use_if").get<bool>();
  c.gp_max_depth = j.at("gp_max_depth").get<int>();
  c.swap_mode = parse_swap_mode(j.at("swap_mode").get<std::string>());
  return c;
}

}  // namespace

std::string to_json_line(const RunResult& r) {
  json trace = json::array();
  for (const auto& p : r.trace) trace.push_back({p.evaluation, p.best_fitness});
  json j = {
      {"config", config_json(r.config)},
      {"best_genotype", r.best_genotype},
      {"best_truth_table", r.best_truth_table},
      {"best_fitness", r.best_fitness},
      {"pen", r.pen},
      {"nl_profile", r.nl_profile},
      {"anf_monomials", r.anf_monomials},
      {"degree", r.degree},
      {"evaluations", r.evaluations},
      {"penalty_computations", r.penalty_computations},
      {"nonlinearity_computations", r.nonlinearity_computations},
      {"trace", trace},
  };
  return j.dump();
}

RunResult from_json_line(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw_parse(std::string("result record: ") + e.what());
  }
  try {
    RunResult r;
    r.config = config_from(j.at("config"));
    r.best_genotype = j.at("best_genotype").get<std::string>();
    r.best_truth_table = j.at("best_truth_table").get<std::string>();
    r.best_fitness = j.at("best_fitness").get<std::int64_t>();
    r.pen = j.at("pen").get<int>();
    r.nl_profile = j.at("nl_profile").get<std::vector<int>>();
    r.anf_monomials = j.at("anf_monomials").get<std::size_t>();
    r.degree = j.at("degree").get<int>();
    r.evaluations = j.at("evaluations").get<std::uint64_t>();
    r.penalty_computations = j.at("penalty_computations").get<std::uint64_t>();
    r.nonlinearity_computations = j.at("nonlinearity_computations").get<std::uint64_t>();
    for (const auto& p : j.at("trace")) {
      r.trace.push_back({p.at(0).get<std::uint64_t>(), p.at(1).get<std::int64_t>()});
    }
    return r;
  } catch (const json::exception& e) {
    throw_parse(std::string("result record: ") + e.what());
  }
}

void write_trace_csv(std::ostream& out, const RunResult& r) {
  for (const auto& p : r.trace) {
    out << r.config.run_id << ',' << p.evaluation << ',' << p.best_fitness << '\n';
  }
}

}  // namespace wpb
