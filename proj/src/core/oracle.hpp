#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "core/boolfun.hpp"

namespace wpb {

// Brute-force ground truth used to cross-check the spectral routines. Nothing
// here goes through Walsh transforms or the weight class index.

// min over all 2^(n+1) affine g of the distance between f and g on E_{n,k}.
int brute_force_restricted_nl(const BooleanFunction& f, int k);
// Same over the whole space.
int brute_force_nonlinearity(const BooleanFunction& f);

struct CensusRow {
  std::string truth_table_hex;
  bool is_linear = false;  // nl_k = 0 for every k in [1, n-1]
  std::vector<int> nl;     // nl_1..nl_{n-1}
};

struct WpbCensus {
  int n = 0;
  std::size_t total = 0;
  std::size_t linear = 0;
  std::map<std::vector<int>, std::size_t> profiles;
  std::vector<CensusRow> rows;
};

// All WPB functions for n in {2, 4}, enumerated slice by slice.
WpbCensus enumerate_wpb(int n);

void write_census_csv(std::ostream& out, const WpbCensus& census);

}  // namespace wpb
