#include "core/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "core/error.hpp"

namespace wpb {

Summary summarize(std::span<const std::int64_t> values) {
  if (values.empty()) throw_invalid("cannot summarize an empty sample");
  std::vector<std::int64_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  Summary s;
  s.count = sorted.size();
  s.min = sorted.front();
  s.max = sorted.back();
  const std::size_t mid = s.count / 2;
  s.median = s.count % 2 ? static_cast<double>(sorted[mid])
                         : (static_cast<double>(sorted[mid - 1]) + static_cast<double>(sorted[mid])) / 2;
  long double sum = 0;
  for (auto v : sorted) sum += static_cast<long double>(v);
  const long double mean = sum / static_cast<long double>(s.count);
  s.mean = static_cast<double>(mean);
  if (s.count > 1) {
    long double sq = 0;
    for (auto v : sorted) sq += (v - mean) * (v - mean);
    s.stddev = static_cast<double>(std::sqrt(sq / static_cast<long double>(s.count - 1)));
  }
  return s;
}

}  // namespace wpb
