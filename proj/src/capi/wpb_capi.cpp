#include "wpb/wpb.h"

#include <sstream>
#include <string>

#include "core/boolfun.hpp"
#include "core/engine.hpp"
#include "core/oracle.hpp"
#include "core/persist.hpp"
#include "core/spaces.hpp"
#include "core/stats.hpp"

struct wpb_function {
  wpb::BooleanFunction f;
  std::string hex;
  std::string binary;
  std::string anf;
};

struct wpb_spaces {
  std::string all, balanced, wpb;
  std::string all_approx, balanced_approx, wpb_approx;
  bool has_wpb = false;
};

struct wpb_census {
  wpb::WpbCensus census;
  std::string csv;
};

struct wpb_run_result {
  wpb::RunResult result;
  std::string json;
  std::string trace_csv;
};

namespace {

thread_local std::string g_last_error;

wpb_status fail(wpb_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
wpb_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return WPB_OK;
  } catch (const wpb::Error& e) {
    switch (e.code()) {
      case wpb::ErrorCode::InvalidArgument:
        return fail(WPB_ERR_INVALID_ARGUMENT, e.what());
      case wpb::ErrorCode::Infeasible:
        return fail(WPB_ERR_INFEASIBLE, e.what());
      case wpb::ErrorCode::Parse:
        return fail(WPB_ERR_PARSE, e.what());
      case wpb::ErrorCode::Io:
        return fail(WPB_ERR_IO, e.what());
    }
    return fail(WPB_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(WPB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WPB_ERR_INTERNAL, "unknown failure");
  }
}

wpb::RunConfig to_core(const wpb_run_config& c) {
  wpb::RunConfig r;
  switch (c.algorithm) {
    case WPB_GA_OP:
      r.algorithm = wpb::Algorithm::GaOp;
      break;
    case WPB_GA_CB:
      r.algorithm = wpb::Algorithm::GaCb;
      break;
    case WPB_GA_MO:
      r.algorithm = wpb::Algorithm::GaMo;
      break;
    case WPB_GP:
      r.algorithm = wpb::Algorithm::Gp;
      break;
    default:
      wpb::throw_invalid("unknown algorithm");
  }
  r.n = c.n;
  if (c.fitness != WPB_FIT1 && c.fitness != WPB_FIT2) wpb::throw_invalid("unknown fitness");
  r.fitness = c.fitness == WPB_FIT1 ? wpb::FitnessKind::Fit1 : wpb::FitnessKind::Fit2;
  r.population = c.population;
  r.p_mut = c.p_mut;
  r.budget = c.budget;
  r.seed = c.seed;
  r.run_id = c.run_id;
  r.gp_use_if = c.gp_use_if != 0;
  r.gp_max_depth = c.gp_max_depth;
  if (c.swap_mode != WPB_SWAP_PER_POSITION && c.swap_mode != WPB_SWAP_PER_SLICE) {
    wpb::throw_invalid("unknown swap mode");
  }
  r.swap_mode = c.swap_mode == WPB_SWAP_PER_SLICE ? wpb::SwapMode::PerSlice
                                                  : wpb::SwapMode::PerPosition;
  return r;
}

wpb_run_config from_core(const wpb::RunConfig& r) {
  wpb_run_config c{};
  c.algorithm = static_cast<wpb_algorithm>(static_cast<int>(r.algorithm));
  c.n = r.n;
  c.fitness = r.fitness == wpb::FitnessKind::Fit1 ? WPB_FIT1 : WPB_FIT2;
  c.population = r.population;
  c.p_mut = r.p_mut;
  c.budget = r.budget;
  c.seed = r.seed;
  c.run_id = r.run_id;
  c.gp_use_if = r.gp_use_if ? 1 : 0;
  c.gp_max_depth = r.gp_max_depth;
  c.swap_mode = r.swap_mode == wpb::SwapMode::PerSlice ? WPB_SWAP_PER_SLICE : WPB_SWAP_PER_POSITION;
  return c;
}

wpb_run_result* wrap(wpb::RunResult r) {
  auto* out = new wpb_run_result{std::move(r), {}, {}};
  out->json = wpb::to_json_line(out->result);
  std::ostringstream trace;
  wpb::write_trace_csv(trace, out->result);
  out->trace_csv = trace.str();
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) wpb::throw_invalid(std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* wpb_status_string(wpb_status status) {
  switch (status) {
    case WPB_OK:
      return "ok";
    case WPB_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case WPB_ERR_INFEASIBLE:
      return "infeasible";
    case WPB_ERR_PARSE:
      return "parse error";
    case WPB_ERR_IO:
      return "i/o error";
    case WPB_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* wpb_last_error(void) { return g_last_error.c_str(); }
const char* wpb_version(void) { return "1.0.0"; }

wpb_status wpb_function_parse(int n, const char* text, wpb_function** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    auto f = wpb::BooleanFunction::parse(n, text);
    auto* h = new wpb_function{f, n >= 2 ? f.to_hex() : std::string(), f.to_binary(),
                               wpb::anf(f).to_string()};
    *out = h;
  });
}

void wpb_function_free(wpb_function* f) { delete f; }
int wpb_function_n(const wpb_function* f) { return f ? f->f.n() : 0; }
const char* wpb_function_hex(const wpb_function* f) { return f ? f->hex.c_str() : nullptr; }
const char* wpb_function_binary(const wpb_function* f) { return f ? f->binary.c_str() : nullptr; }
const char* wpb_function_anf(const wpb_function* f) { return f ? f->anf.c_str() : nullptr; }

wpb_status wpb_function_analyze(const wpb_function* h, wpb_analysis* out) {
  return guarded([&] {
    require(h, "function");
    require(out, "out");
    const auto& f = h->f;
    const int n = f.n();
    const wpb::WeightClassIndex idx(n);
    wpb_analysis a{};
    a.n = n;
    a.weight = static_cast<int>(f.table().popcount());
    a.nonlinearity = wpb::nonlinearity(f);
    a.is_wpb = wpb::is_wpb(f, idx) ? 1 : 0;
    a.pen = wpb::penalty(f, idx);
    const auto poly = wpb::anf(f);
    a.anf_monomials = static_cast<int>(poly.monomial_count());
    a.degree = poly.degree();
    for (int k = 1; k <= n - 1; ++k) {
      a.restricted_weight[k] = wpb::restricted_weight(f, k, idx);
      a.unbalancedness[k] = wpb::unbalancedness(f, k, idx);
      a.restricted_bound[k] = wpb::restricted_bound(n, k);
      if (n <= wpb::RestrictedSignMatrix::kMaxVariables) {
        const wpb::RestrictedSignMatrix m(idx, k);
        a.restricted_nonlinearity[k] = m.nonlinearity(idx.restriction(f, k));
      } else {
        a.restricted_nonlinearity[k] = wpb::restricted_nonlinearity(f, k, idx);
      }
    }
    *out = a;
  });
}

int wpb_feasible(int n) { return wpb::wpb_feasible(n) ? 1 : 0; }

wpb_status wpb_spaces_compute(int n, wpb_spaces** out) {
  return guarded([&] {
    require(out, "out");
    const auto s = wpb::space_sizes(n);
    auto* h = new wpb_spaces;
    h->all = s.all.str();
    h->balanced = s.balanced.str();
    h->all_approx = wpb::scientific(s.all);
    h->balanced_approx = wpb::scientific(s.balanced);
    if (s.wpb) {
      h->has_wpb = true;
      h->wpb = s.wpb->str();
      h->wpb_approx = wpb::scientific(*s.wpb);
    }
    *out = h;
  });
}

void wpb_spaces_free(wpb_spaces* s) { delete s; }
const char* wpb_spaces_all(const wpb_spaces* s) { return s ? s->all.c_str() : nullptr; }
const char* wpb_spaces_balanced(const wpb_spaces* s) { return s ? s->balanced.c_str() : nullptr; }
const char* wpb_spaces_wpb(const wpb_spaces* s) {
  return s && s->has_wpb ? s->wpb.c_str() : nullptr;
}
const char* wpb_spaces_all_approx(const wpb_spaces* s) { return s ? s->all_approx.c_str() : nullptr; }
const char* wpb_spaces_balanced_approx(const wpb_spaces* s) {
  return s ? s->balanced_approx.c_str() : nullptr;
}
const char* wpb_spaces_wpb_approx(const wpb_spaces* s) {
  return s && s->has_wpb ? s->wpb_approx.c_str() : nullptr;
}

wpb_status wpb_census_enumerate(int n, wpb_census** out) {
  return guarded([&] {
    require(out, "out");
    auto* h = new wpb_census{wpb::enumerate_wpb(n), {}};
    std::ostringstream csv;
    wpb::write_census_csv(csv, h->census);
    h->csv = csv.str();
    *out = h;
  });
}

void wpb_census_free(wpb_census* c) { delete c; }
size_t wpb_census_total(const wpb_census* c) { return c ? c->census.total : 0; }
size_t wpb_census_linear(const wpb_census* c) { return c ? c->census.linear : 0; }
const char* wpb_census_csv(const wpb_census* c) { return c ? c->csv.c_str() : nullptr; }

wpb_status wpb_run_config_default(wpb_algorithm algorithm, int n, wpb_run_config* out) {
  return guarded([&] {
    require(out, "out");
    wpb_run_config probe{};
    probe.algorithm = algorithm;
    probe.fitness = WPB_FIT1;
    const auto core_algorithm = to_core(probe).algorithm;
    *out = from_core(wpb::RunConfig::defaults(core_algorithm, n));
  });
}

wpb_status wpb_run_config_validate(const wpb_run_config* config) {
  return guarded([&] {
    require(config, "config");
    to_core(*config).validate();
  });
}

wpb_status wpb_algorithm_parse(const char* name, wpb_algorithm* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = static_cast<wpb_algorithm>(static_cast<int>(wpb::parse_algorithm(name)));
  });
}

const char* wpb_algorithm_name(wpb_algorithm algorithm) {
  if (algorithm < WPB_GA_OP || algorithm > WPB_GP) return "unknown";
  return wpb::algorithm_name(static_cast<wpb::Algorithm>(static_cast<int>(algorithm))).data();
}

uint64_t wpb_derive_seed(uint64_t master_seed, uint64_t run_index) {
  return wpb::derive_seed(master_seed, run_index);
}

wpb_status wpb_run(const wpb_run_config* config, wpb_run_result** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    *out = wrap(wpb::run(to_core(*config)));
  });
}

wpb_status wpb_run_result_parse(const char* json_line, wpb_run_result** out) {
  return guarded([&] {
    require(json_line, "json_line");
    require(out, "out");
    *out = wrap(wpb::from_json_line(json_line));
  });
}

void wpb_run_result_free(wpb_run_result* r) { delete r; }

wpb_status wpb_run_result_config(const wpb_run_result* r, wpb_run_config* out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    *out = from_core(r->result.config);
  });
}

int64_t wpb_run_result_best_fitness(const wpb_run_result* r) { return r ? r->result.best_fitness : 0; }
int wpb_run_result_pen(const wpb_run_result* r) { return r ? r->result.pen : 0; }
uint64_t wpb_run_result_evaluations(const wpb_run_result* r) { return r ? r->result.evaluations : 0; }
size_t wpb_run_result_anf_monomials(const wpb_run_result* r) {
  return r ? r->result.anf_monomials : 0;
}
const char* wpb_run_result_truth_table(const wpb_run_result* r) {
  return r ? r->result.best_truth_table.c_str() : nullptr;
}
const char* wpb_run_result_genotype(const wpb_run_result* r) {
  return r ? r->result.best_genotype.c_str() : nullptr;
}
const char* wpb_run_result_json(const wpb_run_result* r) { return r ? r->json.c_str() : nullptr; }
const char* wpb_run_result_trace_csv(const wpb_run_result* r) {
  return r ? r->trace_csv.c_str() : nullptr;
}

wpb_status wpb_summarize(const int64_t* values, size_t count, wpb_summary* out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(values, "values");
    const auto s = wpb::summarize(std::span<const std::int64_t>(values, count));
    *out = {s.count, s.mean, s.stddev, s.median, s.min, s.max};
  });
}

}  // extern "C"
