// wpb: experiment harness and analysis front end over libwpb.
//
// Exit codes: 0 success, 1 usage error, 2 runtime failure.

#include <wpb/wpb.h>

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

// Failures carry the exit code they map to.
struct CliError : std::runtime_error {
  CliError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

[[noreturn]] void usage_error(const std::string& what) { throw CliError(kExitUsage, what); }
[[noreturn]] void runtime_error(const std::string& what) { throw CliError(kExitRuntime, what); }

void check(wpb_status s, int code = kExitRuntime) {
  if (s != WPB_OK) {
    throw CliError(code, std::string(wpb_status_string(s)) + ": " + wpb_last_error());
  }
}

template <class T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
using FunctionPtr = std::unique_ptr<wpb_function, HandleDeleter<wpb_function, wpb_function_free>>;
using SpacesPtr = std::unique_ptr<wpb_spaces, HandleDeleter<wpb_spaces, wpb_spaces_free>>;
using CensusPtr = std::unique_ptr<wpb_census, HandleDeleter<wpb_census, wpb_census_free>>;
using ResultPtr =
    std::unique_ptr<wpb_run_result, HandleDeleter<wpb_run_result, wpb_run_result_free>>;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string format_double(double v, int precision = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

// Shortest text that distinguishes grid values such as 0.1 and 0.3.
std::string format_pmut(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void print_summary_header() {
  std::printf("%-8s %6s %5s %8s %8s %7s %6s %6s\n", "algo", "p_mut", "runs", "average", "std_dev",
              "median", "min", "max");
}

void print_summary_row(const std::string& algorithm, double p_mut, const std::vector<int64_t>& values) {
  wpb_summary s{};
  check(wpb_summarize(values.data(), values.size(), &s));
  std::printf("%-8s %6s %5zu %8s %8s %7s %6lld %6lld\n", algorithm.c_str(), format_pmut(p_mut).c_str(),
              s.count, format_double(s.mean).c_str(), format_double(s.stddev).c_str(),
              format_double(s.median, s.median == static_cast<int64_t>(s.median) ? 0 : 1).c_str(),
              static_cast<long long>(s.min), static_cast<long long>(s.max));
}

// ---------------------------------------------------------------------------
// evolve

struct EvolveOptions {
  std::string algorithms = "ga-cb";
  int n = 8;
  std::string fitness = "fit1";
  std::string pmut;
  std::size_t population = 0;
  uint64_t budget = 500000;
  int runs = 30;
  uint64_t seed = 0;
  bool seed_given = false;
  std::string out;
  int jobs = 1;
  std::string swap_mode = "per-position";
  bool no_if = false;
  int max_depth = 5;
};

std::vector<wpb_run_config> expand_matrix(const EvolveOptions& o) {
  const auto algorithms = split_list(o.algorithms);
  if (algorithms.empty()) usage_error("--algorithm needs at least one value");
  if (o.runs < 1) usage_error("--runs must be positive");

  wpb_fitness fitness;
  if (o.fitness == "fit1") {
    fitness = WPB_FIT1;
  } else if (o.fitness == "fit2") {
    fitness = WPB_FIT2;
  } else {
    usage_error("--fitness must be fit1 or fit2");
  }
  wpb_swap_mode swap_mode;
  if (o.swap_mode == "per-position") {
    swap_mode = WPB_SWAP_PER_POSITION;
  } else if (o.swap_mode == "per-slice") {
    swap_mode = WPB_SWAP_PER_SLICE;
  } else {
    usage_error("--swap-mode must be per-position or per-slice");
  }

  uint64_t master = o.seed;
  if (!o.seed_given) {
    if (const char* env = std::getenv("WPB_SEED")) {
      try {
        master = std::stoull(env);
      } catch (const std::exception&) {
        usage_error("WPB_SEED is not an unsigned integer");
      }
    }
  }

  std::vector<wpb_run_config> configs;
  std::set<uint64_t> seeds;
  for (const auto& name : algorithms) {
    wpb_algorithm algorithm;
    check(wpb_algorithm_parse(name.c_str(), &algorithm), kExitUsage);
    wpb_run_config base{};
    check(wpb_run_config_default(algorithm, o.n, &base), kExitUsage);
    std::vector<double> rates;
    if (o.pmut.empty()) {
      rates.push_back(base.p_mut);
    } else if (o.pmut == "grid") {
      rates = {0.1, 0.3, 0.5, 0.7, 0.9};
    } else {
      for (const auto& r : split_list(o.pmut)) {
        try {
          rates.push_back(std::stod(r));
        } catch (const std::exception&) {
          usage_error("--pmut value '" + r + "' is not a number");
        }
      }
    }
    for (double rate : rates) {
      for (int r = 0; r < o.runs; ++r) {
        wpb_run_config c = base;
        c.fitness = fitness;
        c.p_mut = rate;
        if (o.population > 0) c.population = o.population;
        c.budget = o.budget;
        c.run_id = static_cast<int>(configs.size());
        c.seed = wpb_derive_seed(master, static_cast<uint64_t>(c.run_id));
        c.gp_use_if = o.no_if ? 0 : 1;
        c.gp_max_depth = o.max_depth;
        c.swap_mode = swap_mode;
        check(wpb_run_config_validate(&c), kExitUsage);
        if (!seeds.insert(c.seed).second) runtime_error("derived run seeds collide");
        configs.push_back(c);
      }
    }
  }
  return configs;
}

int cmd_evolve(const EvolveOptions& o) {
  const auto configs = expand_matrix(o);
  const fs::path dir(o.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) runtime_error("cannot create " + dir.string() + ": " + ec.message());
  const fs::path results_path = dir / "results.jsonl";
  const fs::path trace_path = dir / "trace.csv";

  std::ofstream results(results_path, std::ios::binary | std::ios::trunc);
  std::ofstream trace(trace_path, std::ios::binary | std::ios::trunc);
  auto cleanup = [&] {
    results.close();
    trace.close();
    fs::remove(results_path, ec);
    fs::remove(trace_path, ec);
  };
  if (!results || !trace) {
    cleanup();
    runtime_error("cannot open outputs in " + dir.string());
  }
  trace << "run_id,evaluation,best_fitness\n";

  // Runs complete in any order; records are written in run order as soon as
  // the prefix is available.
  std::vector<ResultPtr> done(configs.size());
  std::vector<int64_t> best(configs.size());
  std::size_t next_write = 0;
  std::mutex mu;
  std::atomic<std::size_t> next_run{0};
  std::optional<std::string> failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next_run.fetch_add(1);
      if (i >= configs.size()) return;
      {
        std::lock_guard lock(mu);
        if (failure) return;
      }
      wpb_run_result* raw = nullptr;
      const wpb_status s = wpb_run(&configs[i], &raw);
      std::lock_guard lock(mu);
      if (s != WPB_OK) {
        if (!failure) failure = std::string(wpb_status_string(s)) + ": " + wpb_last_error();
        return;
      }
      done[i].reset(raw);
      best[i] = wpb_run_result_best_fitness(raw);
      std::fprintf(stderr, "run %zu/%zu %s p_mut=%s best=%lld\n", i + 1, configs.size(),
                   wpb_algorithm_name(configs[i].algorithm), format_pmut(configs[i].p_mut).c_str(),
                   static_cast<long long>(best[i]));
      while (next_write < done.size() && done[next_write]) {
        results << wpb_run_result_json(done[next_write].get()) << '\n';
        trace << wpb_run_result_trace_csv(done[next_write].get());
        results.flush();
        trace.flush();
        done[next_write].reset();
        ++next_write;
      }
    }
  };

  const int jobs = std::max(1, std::min<int>(o.jobs, static_cast<int>(configs.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (failure || !results || !trace) {
    cleanup();
    runtime_error(failure ? *failure : "write failure");
  }

  print_summary_header();
  std::size_t start = 0;
  while (start < configs.size()) {
    std::size_t end = start;
    std::vector<int64_t> values;
    while (end < configs.size() && configs[end].algorithm == configs[start].algorithm &&
           configs[end].p_mut == configs[start].p_mut) {
      values.push_back(best[end++]);
    }
    print_summary_row(wpb_algorithm_name(configs[start].algorithm), configs[start].p_mut, values);
    start = end;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// analyze

int cmd_analyze(const std::string& table, int n, bool json) {
  wpb_function* raw = nullptr;
  check(wpb_function_parse(n, table.c_str(), &raw), kExitUsage);
  FunctionPtr f(raw);
  wpb_analysis a{};
  check(wpb_function_analyze(f.get(), &a));

  auto per_k = [&](const int* values) {
    std::string s;
    for (int k = 1; k <= n - 1; ++k) s += (k > 1 ? "," : "") + std::to_string(values[k]);
    return s;
  };
  if (json) {
    std::printf(
        "{\"n\":%d,\"truth_table\":\"%s\",\"weight\":%d,\"nonlinearity\":%d,\"is_wpb\":%s,"
        "\"pen\":%d,\"restricted_weight\":[%s],\"unbalancedness\":[%s],\"nl_profile\":[%s],"
        "\"restricted_bound\":[%s],\"anf_monomials\":%d,\"degree\":%d}\n",
        n, n >= 2 ? wpb_function_hex(f.get()) : wpb_function_binary(f.get()), a.weight,
        a.nonlinearity, a.is_wpb ? "true" : "false", a.pen, per_k(a.restricted_weight).c_str(),
        per_k(a.unbalancedness).c_str(), per_k(a.restricted_nonlinearity).c_str(),
        per_k(a.restricted_bound).c_str(), a.anf_monomials, a.degree);
    return 0;
  }
  std::printf("n              %d\n", n);
  if (n >= 2) std::printf("truth table    %s\n", wpb_function_hex(f.get()));
  std::printf("weight         %d\n", a.weight);
  std::printf("nonlinearity   %d\n", a.nonlinearity);
  std::printf("is_wpb         %s\n", a.is_wpb ? "true" : "false");
  std::printf("pen            %d\n", a.pen);
  std::printf("anf monomials  %d\n", a.anf_monomials);
  std::printf("degree         %d\n", a.degree);
  std::printf("%4s %8s %6s %6s %6s\n", "k", "weight", "unb_k", "nl_k", "bound");
  for (int k = 1; k <= n - 1; ++k) {
    std::printf("%4d %8d %6d %6d %6d\n", k, a.restricted_weight[k], a.unbalancedness[k],
                a.restricted_nonlinearity[k], a.restricted_bound[k]);
  }
  std::printf("anf            %s\n", wpb_function_anf(f.get()));
  return 0;
}

// ---------------------------------------------------------------------------
// enumerate / spaces

int cmd_enumerate(int n, const std::string& out) {
  wpb_census* raw = nullptr;
  check(wpb_census_enumerate(n, &raw), kExitUsage);
  CensusPtr c(raw);
  if (out.empty()) {
    std::fputs(wpb_census_csv(c.get()), stdout);
  } else {
    std::ofstream file(out, std::ios::binary | std::ios::trunc);
    file << wpb_census_csv(c.get());
    if (!file) {
      std::error_code ec;
      fs::remove(out, ec);
      runtime_error("cannot write " + out);
    }
  }
  std::fprintf(stderr, "n=%d: %zu WPB functions, %zu weightwise-linear\n", n,
               wpb_census_total(c.get()), wpb_census_linear(c.get()));
  return 0;
}

int cmd_spaces(const std::vector<int>& ns) {
  for (int n : ns) {
    wpb_spaces* raw = nullptr;
    check(wpb_spaces_compute(n, &raw), kExitUsage);
    SpacesPtr s(raw);
    const char* wpb = wpb_spaces_wpb(s.get());
    std::printf("n=%d\n", n);
    std::printf("  all       %-12s %s\n", wpb_spaces_all_approx(s.get()), wpb_spaces_all(s.get()));
    std::printf("  balanced  %-12s %s\n", wpb_spaces_balanced_approx(s.get()),
                wpb_spaces_balanced(s.get()));
    if (wpb) {
      std::printf("  wpb       %-12s %s\n", wpb_spaces_wpb_approx(s.get()), wpb);
    } else {
      std::printf("  wpb       n/a (n is not a power of 2)\n");
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// stats

int cmd_stats(const std::string& in, const std::string& out_path) {
  const fs::path dir(in);
  const fs::path results_path = fs::is_directory(dir) ? dir / "results.jsonl" : dir;
  std::ifstream results(results_path, std::ios::binary);
  if (!results) runtime_error("cannot read " + results_path.string());

  struct Cell {
    std::string algorithm;
    double p_mut;
    std::vector<int64_t> values;
  };
  std::vector<Cell> cells;
  std::ostringstream dist;
  dist << "algorithm,p_mut,run_id,best_fitness\n";

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(results, line)) {
    ++line_no;
    if (line.empty()) continue;
    wpb_run_result* raw = nullptr;
    if (wpb_run_result_parse(line.c_str(), &raw) != WPB_OK) {
      runtime_error(results_path.string() + ":" + std::to_string(line_no) + ": " + wpb_last_error());
    }
    ResultPtr r(raw);
    wpb_run_config c{};
    check(wpb_run_result_config(r.get(), &c));
    const std::string algorithm = wpb_algorithm_name(c.algorithm);
    const int64_t value = wpb_run_result_best_fitness(r.get());
    auto it = std::find_if(cells.begin(), cells.end(), [&](const Cell& cell) {
      return cell.algorithm == algorithm && cell.p_mut == c.p_mut;
    });
    if (it == cells.end()) {
      cells.push_back({algorithm, c.p_mut, {}});
      it = cells.end() - 1;
    }
    it->values.push_back(value);
    dist << algorithm << ',' << format_pmut(c.p_mut) << ',' << c.run_id << ',' << value << '\n';
  }
  if (cells.empty()) runtime_error("no result records in " + results_path.string());

  const fs::path dist_path =
      out_path.empty() ? results_path.parent_path() / "distribution.csv" : fs::path(out_path);
  std::ofstream out(dist_path, std::ios::binary | std::ios::trunc);
  out << dist.str();
  if (!out) {
    std::error_code ec;
    fs::remove(dist_path, ec);
    runtime_error("cannot write " + dist_path.string());
  }

  print_summary_header();
  for (const auto& cell : cells) print_summary_row(cell.algorithm, cell.p_mut, cell.values);
  std::fprintf(stderr, "distribution written to %s\n", dist_path.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search for and analyze weightwise perfectly balanced Boolean functions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wpb_version()));

  EvolveOptions evolve;
  auto* evolve_cmd = app.add_subcommand("evolve", "Run seeded evolutionary searches");
  evolve_cmd->add_option("--algorithm", evolve.algorithms, "ga-op, ga-cb, ga-mo, gp (comma list)");
  evolve_cmd->add_option("--n", evolve.n, "Number of variables (power of 2)");
  evolve_cmd->add_option("--fitness", evolve.fitness, "fit1 (sum) or fit2 (minimum)");
  evolve_cmd->add_option("--pmut", evolve.pmut,
                         "Mutation probability, comma list, or 'grid' (default 0.1 GA, 0.9 GP)");
  evolve_cmd->add_option("--pop", evolve.population, "Population size (default 200 GA, 1000 GP)");
  evolve_cmd->add_option("--budget", evolve.budget, "Fitness evaluations per run");
  evolve_cmd->add_option("--runs", evolve.runs, "Runs per (algorithm, p_mut) cell");
  auto* seed_opt = evolve_cmd->add_option("--seed", evolve.seed, "Master seed (env WPB_SEED)");
  evolve_cmd->add_option("--out", evolve.out, "Output directory")->required();
  evolve_cmd->add_option("--jobs", evolve.jobs, "Concurrent runs");
  evolve_cmd->add_option("--swap-mode", evolve.swap_mode, "per-position or per-slice");
  evolve_cmd->add_flag("--no-if", evolve.no_if, "Exclude IF from the GP function set");
  evolve_cmd->add_option("--max-depth", evolve.max_depth, "GP maximum tree depth");

  std::string table;
  int analyze_n = 0;
  bool analyze_json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report cryptographic properties of a function");
  analyze_cmd->add_option("table", table, "Truth table, binary or hex")->required();
  analyze_cmd->add_option("--n", analyze_n, "Number of variables")->required();
  analyze_cmd->add_flag("--json", analyze_json, "Single-line JSON output");

  int enumerate_n = 4;
  std::string enumerate_out;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Exhaustive WPB census as CSV");
  enumerate_cmd->add_option("--n", enumerate_n, "2 or 4")->required();
  enumerate_cmd->add_option("--out", enumerate_out, "CSV file (default stdout)");

  std::vector<int> spaces_n;
  auto* spaces_cmd = app.add_subcommand("spaces", "Search-space sizes, exact and approximate");
  spaces_cmd->add_option("--n", spaces_n, "Variable counts (default 2 4 8 16)");

  std::string stats_in;
  std::string stats_out;
  auto* stats_cmd = app.add_subcommand("stats", "Summarize results.jsonl into a table and CSV");
  stats_cmd->add_option("--in", stats_in, "Run directory or results.jsonl")->required();
  stats_cmd->add_option("--out", stats_out, "Distribution CSV (default <dir>/distribution.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*evolve_cmd) {
      evolve.seed_given = seed_opt->count() > 0;
      return cmd_evolve(evolve);
    }
    if (*analyze_cmd) return cmd_analyze(table, analyze_n, analyze_json);
    if (*enumerate_cmd) return cmd_enumerate(enumerate_n, enumerate_out);
    if (*spaces_cmd) return cmd_spaces(spaces_n.empty() ? std::vector<int>{2, 4, 8, 16} : spaces_n);
    if (*stats_cmd) return cmd_stats(stats_in, stats_out);
  } catch (const CliError& e) {
    std::fprintf(stderr, "wpb: %s\n", e.what());
    return e.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "wpb: %s\n", e.what());
    return kExitRuntime;
  }
  return kExitUsage;
}
