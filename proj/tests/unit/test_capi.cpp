#include <gtest/gtest.h>

#include <wpb/wpb.h>

#include <string>
#include <thread>
#include <vector>

TEST(CApi, AnalyzeTable1) {
  wpb_function* f = nullptr;
  ASSERT_EQ(wpb_function_parse(4, "53A3", &f), WPB_OK);
  EXPECT_STREQ(wpb_function_binary(f), "0101001110100011");
  EXPECT_STREQ(wpb_function_hex(f), "53a3");
  EXPECT_EQ(wpb_function_n(f), 4);
  wpb_analysis a{};
  ASSERT_EQ(wpb_function_analyze(f, &a), WPB_OK);
  EXPECT_EQ(a.weight, 8);
  EXPECT_EQ(a.nonlinearity, 4);
  EXPECT_EQ(a.is_wpb, 1);
  EXPECT_EQ(a.pen, 0);
  EXPECT_EQ(a.anf_monomials, 5);
  EXPECT_EQ(a.degree, 2);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(a.restricted_nonlinearity[k], 0);
    EXPECT_EQ(a.unbalancedness[k], 0);
  }
  EXPECT_EQ(a.restricted_weight[2], 3);
  EXPECT_EQ(a.restricted_bound[2], 1);
  EXPECT_EQ(a.restricted_weight[0], 0);
  EXPECT_STREQ(wpb_function_anf(f), "x1 + x4 + x1x2 + x2x3 + x2x4");
  wpb_function_free(f);
}

TEST(CApi, ErrorsCarryMessages) {
  wpb_function* f = nullptr;
  EXPECT_EQ(wpb_function_parse(4, "53A", &f), WPB_ERR_PARSE);
  EXPECT_EQ(f, nullptr);
  EXPECT_STRNE(wpb_last_error(), "");
  EXPECT_EQ(wpb_function_parse(4, nullptr, &f), WPB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(wpb_function_analyze(nullptr, nullptr), WPB_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(wpb_status_string(WPB_ERR_INFEASIBLE), "infeasible");
}

TEST(CApi, Spaces) {
  wpb_spaces* s = nullptr;
  ASSERT_EQ(wpb_spaces_compute(4, &s), WPB_OK);
  EXPECT_STREQ(wpb_spaces_all(s), "65536");
  EXPECT_STREQ(wpb_spaces_balanced(s), "12870");
  EXPECT_STREQ(wpb_spaces_wpb(s), "720");
  EXPECT_STREQ(wpb_spaces_wpb_approx(s), "7.20e2");
  wpb_spaces_free(s);
  ASSERT_EQ(wpb_spaces_compute(6, &s), WPB_OK);
  EXPECT_EQ(wpb_spaces_wpb(s), nullptr);
  EXPECT_EQ(wpb_spaces_wpb_approx(s), nullptr);
  wpb_spaces_free(s);
  EXPECT_TRUE(wpb_feasible(8));
  EXPECT_FALSE(wpb_feasible(6));
}

TEST(CApi, Census) {
  wpb_census* c = nullptr;
  ASSERT_EQ(wpb_census_enumerate(4, &c), WPB_OK);
  EXPECT_EQ(wpb_census_total(c), 720u);
  EXPECT_EQ(wpb_census_linear(c), 288u);
  EXPECT_EQ(std::string(wpb_census_csv(c)).rfind("truth_table_hex,is_linear,nl_1,nl_2,nl_3\n", 0), 0u);
  wpb_census_free(c);
  EXPECT_EQ(wpb_census_enumerate(8, &c), WPB_ERR_INVALID_ARGUMENT);
}

TEST(CApi, RunAndRoundTrip) {
  wpb_run_config cfg{};
  ASSERT_EQ(wpb_run_config_default(WPB_GA_CB, 8, &cfg), WPB_OK);
  EXPECT_EQ(cfg.population, 200u);
  EXPECT_EQ(cfg.budget, 500000u);
  cfg.population = 30;
  cfg.budget = 1000;
  cfg.seed = wpb_derive_seed(42, 0);
  ASSERT_EQ(wpb_run_config_validate(&cfg), WPB_OK);
  wpb_run_result* r = nullptr;
  ASSERT_EQ(wpb_run(&cfg, &r), WPB_OK);
  EXPECT_EQ(wpb_run_result_evaluations(r), 1000u);
  EXPECT_EQ(wpb_run_result_pen(r), 0);
  EXPECT_GE(wpb_run_result_anf_monomials(r), 7u);

  const std::string json = wpb_run_result_json(r);
  wpb_run_result* back = nullptr;
  ASSERT_EQ(wpb_run_result_parse(json.c_str(), &back), WPB_OK);
  EXPECT_EQ(std::string(wpb_run_result_json(back)), json);
  EXPECT_EQ(wpb_run_result_best_fitness(back), wpb_run_result_best_fitness(r));
  EXPECT_STREQ(wpb_run_result_truth_table(back), wpb_run_result_truth_table(r));
  EXPECT_STREQ(wpb_run_result_genotype(back), wpb_run_result_genotype(r));
  wpb_run_config cfg_back{};
  ASSERT_EQ(wpb_run_result_config(back, &cfg_back), WPB_OK);
  EXPECT_EQ(cfg_back.seed, cfg.seed);
  EXPECT_EQ(cfg_back.algorithm, WPB_GA_CB);
  EXPECT_EQ(std::string(wpb_run_result_trace_csv(r)).rfind("0,1,", 0), 0u);
  wpb_run_result_free(back);
  wpb_run_result_free(r);

  cfg.n = 6;
  EXPECT_EQ(wpb_run_config_validate(&cfg), WPB_ERR_INFEASIBLE);
  EXPECT_EQ(wpb_run(&cfg, &r), WPB_ERR_INFEASIBLE);
  EXPECT_EQ(wpb_run_result_parse("not json", &r), WPB_ERR_PARSE);
}

TEST(CApi, ConcurrentRunsMatchSequential) {
  wpb_run_config cfg{};
  ASSERT_EQ(wpb_run_config_default(WPB_GP, 8, &cfg), WPB_OK);
  cfg.population = 50;
  cfg.budget = 800;
  std::vector<std::string> sequential, concurrent(4);
  for (int i = 0; i < 4; ++i) {
    wpb_run_config c = cfg;
    c.seed = wpb_derive_seed(5, i);
    c.run_id = i;
    wpb_run_result* r = nullptr;
    ASSERT_EQ(wpb_run(&c, &r), WPB_OK);
    sequential.push_back(wpb_run_result_json(r));
    wpb_run_result_free(r);
  }
  std::vector<std::thread> pool;
  for (int i = 0; i < 4; ++i) {
    pool.emplace_back([&, i] {
      wpb_run_config c = cfg;
      c.seed = wpb_derive_seed(5, i);
      c.run_id = i;
      wpb_run_result* r = nullptr;
      if (wpb_run(&c, &r) == WPB_OK) {
        concurrent[i] = wpb_run_result_json(r);
        wpb_run_result_free(r);
      }
    });
  }
  for (auto& t : pool) t.join();
  EXPECT_EQ(concurrent, sequential);
}

TEST(CApi, NamesAndSummary) {
  wpb_algorithm a;
  ASSERT_EQ(wpb_algorithm_parse("ga-op", &a), WPB_OK);
  EXPECT_EQ(a, WPB_GA_OP);
  EXPECT_STREQ(wpb_algorithm_name(WPB_GP), "gp");
  EXPECT_EQ(wpb_algorithm_parse("nope", &a), WPB_ERR_INVALID_ARGUMENT);
  const int64_t v[] = {55, 50, 58, 55};
  wpb_summary s{};
  ASSERT_EQ(wpb_summarize(v, 4, &s), WPB_OK);
  EXPECT_DOUBLE_EQ(s.median, 55);
  EXPECT_EQ(s.min, 50);
  EXPECT_EQ(s.max, 58);
  EXPECT_EQ(wpb_summarize(v, 0, &s), WPB_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(wpb_version()), "");
}
