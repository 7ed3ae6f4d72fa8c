#include "core/genotypes.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace wpb {

void normalize_endpoints(BitVector& table) {
  if (table.empty()) return;
  table.set(0, false);
  table.set(table.size() - 1, true);
}

// ---------------------------------------------------------------------------
// Weightwise representation

WeightwiseGenotype::WeightwiseGenotype(int n, std::vector<BitVector> slices)
    : n_(n), slices_(std::move(slices)) {
  check_variable_count(n);
  if (!wpb_feasible(n)) {
    throw_infeasible("weightwise genotypes need n a power of 2, got " + std::to_string(n));
  }
  if (slices_.size() != static_cast<std::size_t>(n - 1)) {
    throw_invalid("expected " + std::to_string(n - 1) + " slices, got " +
                  std::to_string(slices_.size()));
  }
  for (int k = 1; k <= n - 1; ++k) {
    const auto& s = slices_[k - 1];
    const auto expected = binomial(n, k);
    if (s.size() != expected) {
      throw_invalid("slice " + std::to_string(k) + " has length " + std::to_string(s.size()) +
                    ", expected " + std::to_string(expected));
    }
    if (s.popcount() != expected / 2) {
      throw_invalid("slice " + std::to_string(k) + " has weight " + std::to_string(s.popcount()) +
                    ", expected " + std::to_string(expected / 2));
    }
  }
}

WeightwiseGenotype WeightwiseGenotype::parse(int n, std::string_view text) {
  std::vector<BitVector> slices;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    slices.push_back(BitVector::from_string(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return WeightwiseGenotype(n, std::move(slices));
}

std::string WeightwiseGenotype::to_string() const {
  std::string out;
  for (const auto& s : slices_) {
    if (!out.empty()) out += ',';
    out += s.to_string();
  }
  return out;
}

BooleanFunction decode_weightwise(const WeightwiseGenotype& g, const WeightClassIndex& idx) {
  if (idx.n() != g.n()) throw_invalid("weight class index built for a different n");
  BooleanFunction f(g.n());
  for (int k = 1; k <= g.n() - 1; ++k) {
    const auto members = idx.members(k);
    const auto& slice = g.slice(k);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (slice.get(i)) f.set(members[i], true);
    }
  }
  f.set(static_cast<std::uint32_t>(f.size() - 1), true);
  return f;
}

WeightwiseGenotype encode_weightwise(const BooleanFunction& f, const WeightClassIndex& idx) {
  if (!is_wpb(f, idx)) throw_invalid("function is not weightwise perfectly balanced");
  std::vector<BitVector> slices;
  slices.reserve(f.n() - 1);
  for (int k = 1; k <= f.n() - 1; ++k) slices.push_back(idx.restriction(f, k));
  return WeightwiseBuilder::assemble(f.n(), std::move(slices));
}

// ---------------------------------------------------------------------------
// GP trees

int arity(GpOp op) noexcept {
  switch (op) {
    case GpOp::Var:
      return 0;
    case GpOp::Not:
      return 1;
    case GpOp::If:
      return 3;
    default:
      return 2;
  }
}

std::string_view op_name(GpOp op) noexcept {
  switch (op) {
    case GpOp::Var:
      return "x";
    case GpOp::Not:
      return "NOT";
    case GpOp::Or:
      return "OR";
    case GpOp::Xor:
      return "XOR";
    case GpOp::And:
      return "AND";
    case GpOp::And2:
      return "AND2";
    case GpOp::Xnor:
      return "XNOR";
    case GpOp::If:
      return "IF";
  }
  return "?";
}

GpTree::GpTree(std::vector<GpNode> nodes) : nodes_(std::move(nodes)) {
  // Prefix well-formedness: every node consumes one pending slot and opens arity().
  std::size_t pending = 1;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (pending == 0) throw_invalid("malformed tree: trailing nodes");
    pending += static_cast<std::size_t>(arity(nodes_[i].op)) - 1;
  }
  if (pending != 0) throw_invalid("malformed tree: missing operands");
}

std::size_t GpTree::subtree_end(std::size_t i) const {
  std::size_t pending = 1;
  while (pending > 0) {
    pending += static_cast<std::size_t>(arity(nodes_.at(i).op)) - 1;
    ++i;
  }
  return i;
}

std::vector<int> GpTree::node_depths() const {
  std::vector<int> depths(nodes_.size());
  // Open slots awaiting a child, as the child depth.
  std::vector<int> slots;
  slots.push_back(0);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const int d = slots.back();
    slots.pop_back();
    depths[i] = d;
    for (int c = 0; c < arity(nodes_[i].op); ++c) slots.push_back(d + 1);
  }
  return depths;
}

std::vector<int> GpTree::subtree_heights() const {
  std::vector<int> heights(nodes_.size());
  std::vector<int> stack;
  for (std::size_t i = nodes_.size(); i-- > 0;) {
    int h = 0;
    for (int c = 0; c < arity(nodes_[i].op); ++c) {
      h = std::max(h, stack.back() + 1);
      stack.pop_back();
    }
    heights[i] = h;
    stack.push_back(h);
  }
  return heights;
}

int GpTree::depth() const {
  const auto d = node_depths();
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

int GpTree::max_variable() const {
  int m = 0;
  for (const auto& node : nodes_) {
    if (node.op == GpOp::Var) m = std::max(m, static_cast<int>(node.var));
  }
  return m;
}

GpTree GpTree::subtree(std::size_t i) const {
  GpTree t;
  t.nodes_.assign(nodes_.begin() + static_cast<std::ptrdiff_t>(i),
                  nodes_.begin() + static_cast<std::ptrdiff_t>(subtree_end(i)));
  return t;
}

GpTree GpTree::replace(std::size_t i, const GpTree& replacement) const {
  const auto end = subtree_end(i);
  GpTree t;
  t.nodes_.reserve(nodes_.size() - (end - i) + replacement.size());
  t.nodes_.insert(t.nodes_.end(), nodes_.begin(), nodes_.begin() + static_cast<std::ptrdiff_t>(i));
  t.nodes_.insert(t.nodes_.end(), replacement.nodes_.begin(), replacement.nodes_.end());
  t.nodes_.insert(t.nodes_.end(), nodes_.begin() + static_cast<std::ptrdiff_t>(end), nodes_.end());
  return t;
}

void GpTree::validate(int n, int max_depth) const {
  if (nodes_.empty()) throw_invalid("empty tree");
  for (const auto& node : nodes_) {
    if (node.op == GpOp::Var && (node.var < 1 || node.var > n)) {
      throw_invalid("variable x" + std::to_string(node.var) + " outside [1, " +
                    std::to_string(n) + "]");
    }
  }
  if (depth() > max_depth) {
    throw_invalid("tree depth " + std::to_string(depth()) + " exceeds " +
                  std::to_string(max_depth));
  }
}

std::string GpTree::to_string() const {
  std::string out;
  // Pending closing text per open node: "," between children, ")" at the end.
  std::vector<int> remaining;
  for (const auto& node : nodes_) {
    if (node.op == GpOp::Var) {
      out += "x" + std::to_string(node.var);
    } else {
      out += op_name(node.op);
      out += '(';
      remaining.push_back(arity(node.op));
      continue;
    }
    while (!remaining.empty()) {
      if (--remaining.back() > 0) {
        out += ',';
        break;
      }
      out += ')';
      remaining.pop_back();
    }
  }
  return out;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  std::vector<GpNode> parse() {
    node();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return std::move(nodes_);
  }

 private:
  void node() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const auto word = text_.substr(start, pos_ - start);
    if (word.empty()) fail("expected a node");
    if ((word[0] == 'x' || word[0] == 'X') && word.size() > 1 &&
        std::all_of(word.begin() + 1, word.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const int v = std::stoi(std::string(word.substr(1)));
      if (v < 1 || v > 255) fail("variable index out of range");
      nodes_.push_back({GpOp::Var, static_cast<std::uint8_t>(v)});
      return;
    }
    static constexpr GpOp kOps[] = {GpOp::Not, GpOp::Or,   GpOp::Xor, GpOp::And,
                                    GpOp::And2, GpOp::Xnor, GpOp::If};
    const auto* it = std::find_if(std::begin(kOps), std::end(kOps), [&](GpOp op) {
      const auto name = op_name(op);
      return std::equal(word.begin(), word.end(), name.begin(), name.end(), [](char a, char b) {
        return std::toupper(static_cast<unsigned char>(a)) == b;
      });
    });
    if (it == std::end(kOps)) fail("unknown operator '" + std::string(word) + "'");
    nodes_.push_back({*it, 0});
    expect('(');
    for (int c = 0; c < arity(*it); ++c) {
      if (c > 0) expect(',');
      node();
    }
    expect(')');
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw_parse("tree parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<GpNode> nodes_;
};

}  // namespace

GpTree GpTree::parse(std::string_view text) { return GpTree(TreeParser(text).parse()); }

TreeEvaluator::TreeEvaluator(int n) : n_(n) {
  check_variable_count(n);
  const std::size_t size = std::size_t{1} << n;
  leaves_.assign(n + 1, BitVector(size));
  for (int i = 1; i <= n; ++i) {
    for (std::size_t x = 0; x < size; ++x) {
      if ((x >> (n - i)) & 1) leaves_[i].set(x, true);
    }
  }
}

BooleanFunction TreeEvaluator::evaluate(const GpTree& t) {
  const auto& nodes = t.nodes();
  const std::size_t size = std::size_t{1} << n_;
  if (stack_.size() < nodes.size()) stack_.resize(nodes.size(), BitVector(size));
  std::size_t top = 0;
  // Right-to-left over prefix order: the first child ends up on top.
  for (std::size_t i = nodes.size(); i-- > 0;) {
    const auto& node = nodes[i];
    if (node.op == GpOp::Var) {
      if (node.var < 1 || node.var > n_) throw_invalid("tree variable outside [1, n]");
      stack_[top++] = leaves_[node.var];
      continue;
    }
    const int ar = arity(node.op);
    auto a = stack_[top - 1].words();
    if (node.op == GpOp::Not) {
      for (auto& w : a) w = ~w;
      stack_[top - 1].trim();
      continue;
    }
    const auto b = stack_[top - 2].words();
    switch (node.op) {
      case GpOp::Or:
        for (std::size_t w = 0; w < a.size(); ++w) a[w] |= b[w];
        break;
      case GpOp::Xor:
        for (std::size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
        break;
      case GpOp::And:
        for (std::size_t w = 0; w < a.size(); ++w) a[w] &= b[w];
        break;
      case GpOp::And2:
        for (std::size_t w = 0; w < a.size(); ++w) a[w] &= ~b[w];
        break;
      case GpOp::Xnor:
        for (std::size_t w = 0; w < a.size(); ++w) a[w] = ~(a[w] ^ b[w]);
        break;
      case GpOp::If: {
        const auto e = stack_[top - 3].words();
        for (std::size_t w = 0; w < a.size(); ++w) a[w] = (a[w] & b[w]) | (~a[w] & e[w]);
        break;
      }
      default:
        break;
    }
    stack_[top - 1].trim();
    // Result sits in the first child's slot; move it down over the consumed ones.
    std::swap(stack_[top - 1], stack_[top - ar]);
    top -= ar - 1;
  }
  return BooleanFunction(n_, stack_[0]);
}

BooleanFunction evaluate_tree(const GpTree& t, int n) {
  TreeEvaluator ev(n);
  return ev.evaluate(t);
}

// ---------------------------------------------------------------------------
// Random initialization

TruthTableGenotype random_truth_table(int n, Rng& rng) {
  check_variable_count(n);
  TruthTableGenotype g{n, BitVector(std::size_t{1} << n)};
  for (auto& w : g.bits.words()) w = rng();
  g.bits.trim();
  normalize_endpoints(g.bits);
  return g;
}

BitVector random_balanced(std::size_t length, Rng& rng) {
  std::vector<std::uint8_t> bits(length, 0);
  std::fill(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(length / 2), 1);
  std::shuffle(bits.begin(), bits.end(), rng);
  BitVector v(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (bits[i]) v.set(i, true);
  }
  return v;
}

WeightwiseGenotype random_weightwise(int n, Rng& rng) {
  check_variable_count(n);
  if (!wpb_feasible(n)) {
    throw_infeasible("weightwise genotypes need n a power of 2, got " + std::to_string(n));
  }
  std::vector<BitVector> slices;
  slices.reserve(n - 1);
  for (int k = 1; k <= n - 1; ++k) slices.push_back(random_balanced(binomial(n, k), rng));
  return WeightwiseBuilder::assemble(n, std::move(slices));
}

namespace {

constexpr GpOp kFunctionsWithIf[] = {GpOp::Not, GpOp::Or,   GpOp::Xor, GpOp::And,
                                     GpOp::And2, GpOp::Xnor, GpOp::If};

void grow(std::vector<GpNode>& out, int n, int depth, int limit, bool full, bool use_if,
          Rng& rng) {
  const std::size_t functions = use_if ? 7 : 6;
  // The root is always drawn from the function set.
  bool terminal = depth >= limit;
  if (!terminal && !full && depth > 0) {
    std::uniform_int_distribution<std::size_t> pick(0, static_cast<std::size_t>(n) + functions - 1);
    terminal = pick(rng) < static_cast<std::size_t>(n);
  }
  if (terminal) {
    std::uniform_int_distribution<int> var(1, n);
    out.push_back({GpOp::Var, static_cast<std::uint8_t>(var(rng))});
    return;
  }
  std::uniform_int_distribution<std::size_t> fn(0, functions - 1);
  const GpOp op = kFunctionsWithIf[fn(rng)];
  out.push_back({op, 0});
  for (int c = 0; c < arity(op); ++c) grow(out, n, depth + 1, limit, full, use_if, rng);
}

}  // namespace

GpTree random_tree_of_depth(int n, int depth, bool full, bool use_if, Rng& rng) {
  check_variable_count(n);
  if (depth < 0) throw_invalid("tree depth must be non-negative");
  std::vector<GpNode> nodes;
  grow(nodes, n, 0, depth, full, use_if, rng);
  return GpTree(std::move(nodes));
}

GpTree random_tree(int n, Rng& rng, bool use_if, int max_depth) {
  const int low = std::min(2, max_depth);
  std::uniform_int_distribution<int> depth(low, max_depth);
  std::bernoulli_distribution full(0.5);
  const int d = depth(rng);
  return random_tree_of_depth(n, d, full(rng), use_if, rng);
}

}  // namespace wpb
