#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace wpb {

struct Summary {
  std::size_t count = 0;
  double mean = 0;
  double stddev = 0;  // sample (N-1); 0 for a single value
  double median = 0;
  std::int64_t min = 0;
  std::int64_t max = 0;
};

// Throws on an empty sample.
Summary summarize(std::span<const std::int64_t> values);

}  // namespace wpb
