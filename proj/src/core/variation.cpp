#include "core/variation.hpp"

#include <algorithm>
#include <optional>

namespace wpb {

TruthTableGenotype one_point_crossover_at(const TruthTableGenotype& a, const TruthTableGenotype& b,
                                          std::size_t cut) {
  if (a.n != b.n) throw_invalid("crossover parents have different n");
  TruthTableGenotype child = a;
  for (std::size_t i = cut; i < b.bits.size(); ++i) child.bits.set(i, b.bits.get(i));
  normalize_endpoints(child.bits);
  return child;
}

TruthTableGenotype one_point_crossover(const TruthTableGenotype& a, const TruthTableGenotype& b,
                                       Rng& rng) {
  if (a.n != b.n) throw_invalid("crossover parents have different n");
  std::uniform_int_distribution<std::size_t> cut(1, a.bits.size() - 1);
  return one_point_crossover_at(a, b, cut(rng));
}

TruthTableGenotype flip_mutation(const TruthTableGenotype& g, double p_mut, Rng& rng) {
  TruthTableGenotype out = g;
  if (std::bernoulli_distribution(p_mut)(rng)) {
    std::uniform_int_distribution<std::size_t> pos(0, g.bits.size() - 1);
    out.bits.flip(pos(rng));
  }
  normalize_endpoints(out.bits);
  return out;
}

BitVector counter_based_slice(const BitVector& a, const BitVector& b,
                              const std::function<bool()>& take_second) {
  if (a.size() != b.size()) throw_invalid("slice lengths differ");
  const std::size_t quota = a.size() / 2;
  std::size_t ones = 0;
  std::size_t zeros = 0;
  BitVector child(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool bit;
    if (ones == quota) {
      bit = false;
    } else if (zeros == quota) {
      bit = true;
    } else {
      bit = take_second() ? b.get(i) : a.get(i);
    }
    if (bit) {
      child.set(i, true);
      ++ones;
    } else {
      ++zeros;
    }
  }
  return child;
}

namespace {

std::vector<std::size_t> ones_of(const BitVector& v) {
  std::vector<std::size_t> out;
  out.reserve(v.popcount());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.get(i)) out.push_back(i);
  }
  return out;
}

}  // namespace

BitVector map_of_ones_slice(const BitVector& a, const BitVector& b,
                            const std::function<bool()>& take_second,
                            const std::function<std::size_t(std::size_t)>& pick_unused) {
  if (a.size() != b.size()) throw_invalid("slice lengths differ");
  const auto map_a = ones_of(a);
  const auto map_b = ones_of(b);
  if (map_a.size() != map_b.size()) throw_invalid("parent slices have different weights");
  BitVector child(a.size());
  std::size_t used = 0;
  for (std::size_t slot = 0; slot < map_a.size(); ++slot) {
    std::size_t pos = take_second() ? map_b[slot] : map_a[slot];
    if (child.get(pos)) {
      // The r-th position still at zero, in increasing order.
      std::size_t r = pick_unused(child.size() - used);
      pos = 0;
      for (;; ++pos) {
        if (!child.get(pos) && r-- == 0) break;
      }
    }
    child.set(pos, true);
    ++used;
  }
  return child;
}

namespace {

void check_same_n(const WeightwiseGenotype& a, const WeightwiseGenotype& b) {
  if (a.n() != b.n()) throw_invalid("crossover parents have different n");
}

// Fair coin flips served 64 at a time from one generator draw.
class CoinPool {
 public:
  explicit CoinPool(Rng& rng) : rng_(rng) {}
  bool operator()() {
    if (left_ == 0) {
      bits_ = rng_();
      left_ = 64;
    }
    const bool out = bits_ & 1;
    bits_ >>= 1;
    --left_;
    return out;
  }

 private:
  Rng& rng_;
  std::uint64_t bits_ = 0;
  int left_ = 0;
};

}  // namespace

WeightwiseGenotype counter_based_crossover(const WeightwiseGenotype& a, const WeightwiseGenotype& b,
                                           Rng& rng) {
  check_same_n(a, b);
  CoinPool coin(rng);
  const auto take_second = [&] { return coin(); };
  std::vector<BitVector> slices;
  slices.reserve(a.slices().size());
  for (int k = 1; k <= a.n() - 1; ++k) {
    slices.push_back(counter_based_slice(a.slice(k), b.slice(k), take_second));
  }
  return WeightwiseBuilder::assemble(a.n(), std::move(slices));
}

WeightwiseGenotype map_of_ones_crossover(const WeightwiseGenotype& a, const WeightwiseGenotype& b,
                                         Rng& rng) {
  check_same_n(a, b);
  CoinPool coin(rng);
  const auto take_second = [&] { return coin(); };
  const auto pick_unused = [&](std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
  };
  std::vector<BitVector> slices;
  slices.reserve(a.slices().size());
  for (int k = 1; k <= a.n() - 1; ++k) {
    slices.push_back(map_of_ones_slice(a.slice(k), b.slice(k), take_second, pick_unused));
  }
  return WeightwiseBuilder::assemble(a.n(), std::move(slices));
}

WeightwiseGenotype swap_mutation(const WeightwiseGenotype& g, double p_mut, Rng& rng,
                                 SwapMode mode) {
  if (p_mut <= 0.0) return g;
  std::vector<BitVector> slices = g.slices();
  std::bernoulli_distribution trigger(p_mut);
  // Gaps between triggered positions are geometric, so only triggers cost a draw.
  std::optional<std::geometric_distribution<std::size_t>> gap;
  if (p_mut < 1.0) gap.emplace(p_mut);
  for (auto& s : slices) {
    std::uniform_int_distribution<std::size_t> pos(0, s.size() - 1);
    if (mode == SwapMode::PerPosition) {
      for (std::size_t i = gap ? (*gap)(rng) : 0; i < s.size(); i += 1 + (gap ? (*gap)(rng) : 0)) {
        s.swap_bits(i, pos(rng));
      }
    } else if (trigger(rng)) {
      const auto i = pos(rng);
      s.swap_bits(i, pos(rng));
    }
  }
  return WeightwiseBuilder::assemble(g.n(), std::move(slices));
}

// ---------------------------------------------------------------------------
// GP crossovers

namespace {

// Koza's 90/10 bias towards internal crossover points.
std::size_t pick_koza_point(const GpTree& t, Rng& rng) {
  std::vector<std::size_t> internal;
  std::vector<std::size_t> leaves;
  for (std::size_t i = 0; i < t.size(); ++i) {
    (arity(t.nodes()[i].op) > 0 ? internal : leaves).push_back(i);
  }
  const bool use_internal = !internal.empty() && std::bernoulli_distribution(0.9)(rng);
  const auto& pool = use_internal ? internal : leaves;
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

std::vector<std::size_t> child_offsets(const GpTree& t, std::size_t i) {
  std::vector<std::size_t> out;
  std::size_t c = i + 1;
  for (int k = 0; k < arity(t.nodes()[i].op); ++k) {
    out.push_back(c);
    c = t.subtree_end(c);
  }
  return out;
}

// Node pairs at the same position in both trees. With strict_arity the walk
// stops descending where arities differ (common region); otherwise it follows
// every child index present in both (context-preserving positions).
void aligned_positions(const GpTree& a, std::size_t ia, const GpTree& b, std::size_t ib,
                       bool strict_arity,
                       std::vector<std::pair<std::size_t, std::size_t>>& out) {
  out.emplace_back(ia, ib);
  const int ar_a = arity(a.nodes()[ia].op);
  const int ar_b = arity(b.nodes()[ib].op);
  if (strict_arity && ar_a != ar_b) return;
  const auto ca = child_offsets(a, ia);
  const auto cb = child_offsets(b, ib);
  for (std::size_t c = 0; c < std::min(ca.size(), cb.size()); ++c) {
    aligned_positions(a, ca[c], b, cb[c], strict_arity, out);
  }
}

void uniform_merge(const GpTree& a, std::size_t ia, const GpTree& b, std::size_t ib, Rng& rng,
                   std::vector<GpNode>& out) {
  std::bernoulli_distribution coin(0.5);
  const GpNode& na = a.nodes()[ia];
  const GpNode& nb = b.nodes()[ib];
  if (arity(na.op) == arity(nb.op) && arity(na.op) > 0) {
    out.push_back(coin(rng) ? nb : na);
    const auto ca = child_offsets(a, ia);
    const auto cb = child_offsets(b, ib);
    for (std::size_t c = 0; c < ca.size(); ++c) uniform_merge(a, ca[c], b, cb[c], rng, out);
    return;
  }
  // Boundary of the common region: whole subtrees are exchanged.
  const bool second = coin(rng);
  const GpTree& src = second ? b : a;
  const std::size_t i = second ? ib : ia;
  const auto& nodes = src.nodes();
  out.insert(out.end(), nodes.begin() + static_cast<std::ptrdiff_t>(i),
             nodes.begin() + static_cast<std::ptrdiff_t>(src.subtree_end(i)));
}

GpTree size_fair(const GpTree& a, const GpTree& b, Rng& rng) {
  const std::size_t pa = std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng);
  const std::size_t removed = a.subtree_end(pa) - pa;
  // Bucket b's subtrees by size relative to the removed one, capped at 2s+1.
  std::vector<std::size_t> smaller, equal, bigger;
  double sum_smaller = 0, sum_bigger = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::size_t s = b.subtree_end(i) - i;
    if (s < removed) {
      smaller.push_back(i);
      sum_smaller += static_cast<double>(s);
    } else if (s == removed) {
      equal.push_back(i);
    } else if (s <= 2 * removed + 1) {
      bigger.push_back(i);
      sum_bigger += static_cast<double>(s);
    }
  }
  // Equal size with probability 1/s; the rest split between smaller and
  // bigger so the expected size change is zero.
  const double p_equal = equal.empty() ? 0.0 : 1.0 / static_cast<double>(removed);
  double p_smaller = 0.0;
  if (!smaller.empty() && !bigger.empty()) {
    const double mean_s = sum_smaller / static_cast<double>(smaller.size());
    const double mean_b = sum_bigger / static_cast<double>(bigger.size());
    const double s = static_cast<double>(removed);
    p_smaller = (1.0 - p_equal) * (mean_b - s) / (mean_b - mean_s);
  } else if (!smaller.empty()) {
    p_smaller = 1.0 - p_equal;
  }
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  const std::vector<std::size_t>* pool;
  if (u < p_equal && !equal.empty()) {
    pool = &equal;
  } else if (u < p_equal + p_smaller && !smaller.empty()) {
    pool = &smaller;
  } else if (!bigger.empty()) {
    pool = &bigger;
  } else if (!equal.empty()) {
    pool = &equal;
  } else {
    pool = &smaller;
  }
  const std::size_t pb = (*pool)[std::uniform_int_distribution<std::size_t>(0, pool->size() - 1)(rng)];
  return a.replace(pa, b.subtree(pb));
}

}  // namespace

GpTree gp_crossover_variant(GpCrossover variant, const GpTree& a, const GpTree& b, Rng& rng) {
  switch (variant) {
    case GpCrossover::Subtree: {
      const auto pa = pick_koza_point(a, rng);
      const auto pb = pick_koza_point(b, rng);
      return a.replace(pa, b.subtree(pb));
    }
    case GpCrossover::Uniform: {
      std::vector<GpNode> nodes;
      uniform_merge(a, 0, b, 0, rng, nodes);
      return GpTree(std::move(nodes));
    }
    case GpCrossover::SizeFair:
      return size_fair(a, b, rng);
    case GpCrossover::OnePoint:
    case GpCrossover::ContextPreserving: {
      std::vector<std::pair<std::size_t, std::size_t>> positions;
      aligned_positions(a, 0, b, 0, variant == GpCrossover::OnePoint, positions);
      const auto [pa, pb] =
          positions[std::uniform_int_distribution<std::size_t>(0, positions.size() - 1)(rng)];
      return a.replace(pa, b.subtree(pb));
    }
  }
  return a;
}

GpTree gp_crossover(const GpTree& a, const GpTree& b, Rng& rng, int max_depth) {
  const auto pick = std::uniform_int_distribution<std::size_t>(0, std::size(kGpCrossovers) - 1)(rng);
  GpTree child = gp_crossover_variant(kGpCrossovers[pick], a, b, rng);
  if (child.depth() > max_depth) return a;
  return child;
}

GpTree subtree_mutation(const GpTree& t, double p_mut, int n, Rng& rng, bool use_if,
                        int max_depth) {
  if (!std::bernoulli_distribution(p_mut)(rng)) return t;
  const std::size_t i = std::uniform_int_distribution<std::size_t>(0, t.size() - 1)(rng);
  const int room = std::max(0, max_depth - t.node_depths()[i]);
  const int depth = std::uniform_int_distribution<int>(0, room)(rng);
  return t.replace(i, random_tree_of_depth(n, depth, false, use_if, rng));
}

}  // namespace wpb
