/*
 * libwpb: construction and analysis of weightwise perfectly balanced (WPB)
 * Boolean functions.
 *
 * All objects are opaque handles released with the matching *_free call.
 * Every fallible call returns a wpb_status; on failure a message for the
 * calling thread is available from wpb_last_error(). Strings returned by
 * accessors stay valid until the owning handle is freed.
 *
 * Truth tables list f(x) with x in lexicographic order and x_1 as the most
 * significant input bit. Binary text starts with f(0...0); hex text packs
 * four table bits per digit in the same order.
 */
#ifndef WPB_WPB_H
#define WPB_WPB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WPB_BUILDING_LIBRARY)
#    define WPB_API __declspec(dllexport)
#  else
#    define WPB_API __declspec(dllimport)
#  endif
#else
#  define WPB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define WPB_MAX_VARIABLES 16

typedef enum wpb_status {
  WPB_OK = 0,
  WPB_ERR_INVALID_ARGUMENT = 1,
  WPB_ERR_INFEASIBLE = 2, /* n is not a power of 2 where WPB is required */
  WPB_ERR_PARSE = 3,
  WPB_ERR_IO = 5,
  WPB_ERR_INTERNAL = 6
} wpb_status;

WPB_API const char* wpb_status_string(wpb_status status);
/* Message of the last failure on this thread, "" if none. */
WPB_API const char* wpb_last_error(void);
WPB_API const char* wpb_version(void);

/* ---- Boolean functions -------------------------------------------------- */

typedef struct wpb_function wpb_function;

/* Accepts binary (2^n digits) or hex (2^n / 4 digits, optional 0x). */
WPB_API wpb_status wpb_function_parse(int n, const char* text, wpb_function** out);
WPB_API void wpb_function_free(wpb_function* f);
WPB_API int wpb_function_n(const wpb_function* f);
WPB_API const char* wpb_function_hex(const wpb_function* f);
WPB_API const char* wpb_function_binary(const wpb_function* f);

typedef struct wpb_analysis {
  int n;
  int weight;
  int nonlinearity;
  int is_wpb;
  int pen;
  int anf_monomials;
  int degree;
  /* Index k in [1, n-1]; entries outside that range are zero. */
  int restricted_weight[WPB_MAX_VARIABLES];
  int unbalancedness[WPB_MAX_VARIABLES];
  int restricted_nonlinearity[WPB_MAX_VARIABLES];
  int restricted_bound[WPB_MAX_VARIABLES];
} wpb_analysis;

WPB_API wpb_status wpb_function_analyze(const wpb_function* f, wpb_analysis* out);
/* ANF as text, e.g. "x1 + x2x3". */
WPB_API const char* wpb_function_anf(const wpb_function* f);

/* ---- search-space sizes -------------------------------------------------- */

WPB_API int wpb_feasible(int n);

typedef struct wpb_spaces wpb_spaces;

WPB_API wpb_status wpb_spaces_compute(int n, wpb_spaces** out);
WPB_API void wpb_spaces_free(wpb_spaces* s);
/* Exact decimal values. wpb_spaces_wpb returns NULL when n is not a power of 2. */
WPB_API const char* wpb_spaces_all(const wpb_spaces* s);
WPB_API const char* wpb_spaces_balanced(const wpb_spaces* s);
WPB_API const char* wpb_spaces_wpb(const wpb_spaces* s);
/* Rounded forms such as "5.18e70"; same NULL rule. */
WPB_API const char* wpb_spaces_all_approx(const wpb_spaces* s);
WPB_API const char* wpb_spaces_balanced_approx(const wpb_spaces* s);
WPB_API const char* wpb_spaces_wpb_approx(const wpb_spaces* s);

/* ---- exhaustive census (n = 2 or 4) -------------------------------------- */

typedef struct wpb_census wpb_census;

WPB_API wpb_status wpb_census_enumerate(int n, wpb_census** out);
WPB_API void wpb_census_free(wpb_census* c);
WPB_API size_t wpb_census_total(const wpb_census* c);
WPB_API size_t wpb_census_linear(const wpb_census* c);
/* Columns truth_table_hex,is_linear,nl_1..nl_{n-1}. */
WPB_API const char* wpb_census_csv(const wpb_census* c);

/* ---- evolutionary runs ---------------------------------------------------- */

typedef enum wpb_algorithm {
  WPB_GA_OP = 0, /* truth table, one-point crossover, flip mutation */
  WPB_GA_CB = 1, /* weightwise, counter-based crossover, swap mutation */
  WPB_GA_MO = 2, /* weightwise, map-of-ones crossover, swap mutation */
  WPB_GP = 3     /* syntax trees */
} wpb_algorithm;

typedef enum wpb_fitness { WPB_FIT1 = 0, WPB_FIT2 = 1 } wpb_fitness;

typedef enum wpb_swap_mode { WPB_SWAP_PER_POSITION = 0, WPB_SWAP_PER_SLICE = 1 } wpb_swap_mode;

typedef struct wpb_run_config {
  wpb_algorithm algorithm;
  int n;
  wpb_fitness fitness;
  size_t population;
  double p_mut;
  uint64_t budget;
  uint64_t seed;
  int run_id;
  int gp_use_if;
  int gp_max_depth;
  wpb_swap_mode swap_mode;
} wpb_run_config;

/* Population 200 (GA) or 1000 (GP), budget 500000, depth 5, IF enabled. */
WPB_API wpb_status wpb_run_config_default(wpb_algorithm algorithm, int n, wpb_run_config* out);
/* Checks a config without running it (e.g. rejects n not a power of 2). */
WPB_API wpb_status wpb_run_config_validate(const wpb_run_config* config);
WPB_API wpb_status wpb_algorithm_parse(const char* name, wpb_algorithm* out);
WPB_API const char* wpb_algorithm_name(wpb_algorithm algorithm);
WPB_API uint64_t wpb_derive_seed(uint64_t master_seed, uint64_t run_index);

typedef struct wpb_run_result wpb_run_result;

/* Runs one seeded search; safe to call concurrently from several threads. */
WPB_API wpb_status wpb_run(const wpb_run_config* config, wpb_run_result** out);
WPB_API wpb_status wpb_run_result_parse(const char* json_line, wpb_run_result** out);
WPB_API void wpb_run_result_free(wpb_run_result* r);

WPB_API wpb_status wpb_run_result_config(const wpb_run_result* r, wpb_run_config* out);
WPB_API int64_t wpb_run_result_best_fitness(const wpb_run_result* r);
WPB_API int wpb_run_result_pen(const wpb_run_result* r);
WPB_API uint64_t wpb_run_result_evaluations(const wpb_run_result* r);
WPB_API size_t wpb_run_result_anf_monomials(const wpb_run_result* r);
WPB_API const char* wpb_run_result_truth_table(const wpb_run_result* r);
WPB_API const char* wpb_run_result_genotype(const wpb_run_result* r);
/* Single-line JSON record, no trailing newline. */
WPB_API const char* wpb_run_result_json(const wpb_run_result* r);
/* Rows "run_id,evaluation,best_fitness\n", no header. */
WPB_API const char* wpb_run_result_trace_csv(const wpb_run_result* r);

/* ---- statistics ------------------------------------------------------------ */

typedef struct wpb_summary {
  size_t count;
  double mean;
  double stddev; /* sample standard deviation */
  double median;
  int64_t min;
  int64_t max;
} wpb_summary;

WPB_API wpb_status wpb_summarize(const int64_t* values, size_t count, wpb_summary* out);

#ifdef __cplusplus
}
#endif

#endif /* WPB_WPB_H */
