#include "skewlines/symbol.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "skewlines/error.hpp"
#include "skewlines/invariants.hpp"

namespace skewlines {

int SymbolNode::leaf_count() const {
  if (is_bundle()) return bundle;
  int n = 0;
  for (const auto& c : children) n += c.leaf_count();
  return n;
}

namespace {

// Symbol node that also remembers which table label sits at each leaf.
struct LabeledNode {
  std::optional<int> sign;
  std::vector<int> leaves;  // non-empty iff bundle
  std::vector<LabeledNode> children;

  bool is_bundle() const { return !leaves.empty(); }
  int leaf_count() const {
    if (is_bundle()) return static_cast<int>(leaves.size());
    int n = 0;
    for (const auto& c : children) n += c.leaf_count();
    return n;
  }
};

int sign_rank(const std::optional<int>& s) {
  if (!s) return 2;
  return *s > 0 ? 0 : 1;
}

int compare(const LabeledNode& a, const LabeledNode& b) {
  auto three_way = [](int x, int y) { return x < y ? -1 : (x > y ? 1 : 0); };
  if (int c = three_way(a.leaf_count(), b.leaf_count())) return c;
  if (int c = three_way(a.is_bundle() ? 0 : 1, b.is_bundle() ? 0 : 1)) return c;
  if (int c = three_way(sign_rank(a.sign), sign_rank(b.sign))) return c;
  if (a.is_bundle()) return 0;
  if (int c = three_way(static_cast<int>(a.children.size()), static_cast<int>(b.children.size()))) return c;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (int c = compare(a.children[i], b.children[i])) return c;
  }
  return 0;
}

LabeledNode canonicalize(LabeledNode node) {
  if (node.is_bundle()) {
    if (node.leaves.size() == 1) node.sign.reset();
    return node;
  }
  if (node.children.empty()) throw Error(ErrorCode::ParseError, "empty symbol node");
  for (auto& c : node.children) c = canonicalize(std::move(c));
  if (node.children.size() == 1) {
    LabeledNode only = std::move(node.children.front());
    if (node.sign) {
      if (only.sign && only.sign != node.sign) {
        throw Error(ErrorCode::ParseError, "conflicting signs on a single-child node");
      }
      only.sign = node.sign;
    }
    return canonicalize(std::move(only));
  }
  bool all_single = std::all_of(node.children.begin(), node.children.end(),
                                [](const LabeledNode& c) { return c.is_bundle() && c.leaves.size() == 1; });
  if (all_single) {
    LabeledNode merged;
    merged.sign = node.sign;
    for (const auto& c : node.children) merged.leaves.push_back(c.leaves.front());
    return merged;
  }
  std::stable_sort(node.children.begin(), node.children.end(),
                   [](const LabeledNode& a, const LabeledNode& b) { return compare(a, b) < 0; });
  return node;
}

SymbolNode strip(const LabeledNode& node) {
  SymbolNode out;
  out.sign = node.sign;
  out.bundle = static_cast<int>(node.leaves.size());
  for (const auto& c : node.children) out.children.push_back(strip(c));
  return out;
}

LabeledNode with_dummy_labels(const SymbolNode& node) {
  LabeledNode out;
  out.sign = node.sign;
  if (node.bundle < 0) throw Error(ErrorCode::ParseError, "negative bundle size");
  out.leaves.assign(static_cast<std::size_t>(node.bundle), -1);
  if (node.is_bundle() && !node.children.empty()) {
    throw Error(ErrorCode::ParseError, "bundle node cannot have children");
  }
  for (const auto& c : node.children) out.children.push_back(with_dummy_labels(c));
  return out;
}

void collect_leaves(const LabeledNode& node, std::vector<int>& out) {
  if (node.is_bundle()) {
    out.insert(out.end(), node.leaves.begin(), node.leaves.end());
    return;
  }
  for (const auto& c : node.children) collect_leaves(c, out);
}

std::string render(const SymbolNode& node) {
  std::string s = "<";
  if (node.sign) s += *node.sign > 0 ? "+" : "-";
  if (node.is_bundle()) {
    s += std::to_string(node.bundle);
  } else {
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (i) s += ",";
      s += render(node.children[i]);
    }
  }
  return s + ">";
}

class Parser {
 public:
  explicit Parser(std::string text) : text_(std::move(text)) {}

  SymbolNode parse_all() {
    SymbolNode n = parse_node();
    if (pos_ != text_.size()) fail("trailing characters");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                "symbol '" + text_ + "': " + what + " at position " + std::to_string(pos_));
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int parse_int() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a count");
    int v = std::stoi(text_.substr(start, pos_ - start));
    if (v <= 0) fail("bundle size must be positive");
    return v;
  }
  SymbolNode parse_item() {
    if (peek() == '<') return parse_node();
    SymbolNode b;
    b.bundle = parse_int();
    return b;
  }
  SymbolNode parse_node() {
    expect('<');
    SymbolNode node;
    if (peek() == '+' || peek() == '-') {
      node.sign = peek() == '+' ? 1 : -1;
      ++pos_;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t save = pos_;
      int v = parse_int();
      if (peek() == '>') {
        ++pos_;
        node.bundle = v;
        return node;
      }
      pos_ = save;
    }
    node.children.push_back(parse_item());
    while (peek() == ',') {
      ++pos_;
      node.children.push_back(parse_item());
    }
    expect('>');
    return node;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

std::string normalize_text(std::string_view in) {
  std::string out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    auto rest = in.substr(i);
    if (rest.starts_with("⟨")) {
      out += '<';
      i += 2;
    } else if (rest.starts_with("⟩")) {
      out += '>';
      i += 2;
    } else if (rest.starts_with("−")) {
      out += '-';
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(in[i]))) {
      out += in[i];
    }
  }
  return out;
}

struct FlatTree {
  std::vector<int> parent;
  std::vector<int> depth;
  std::vector<std::optional<int>> sign;
  std::vector<int> leaf_node;  // tree node index of each leaf, DFS order

  int add(int par, std::optional<int> s) {
    parent.push_back(par);
    depth.push_back(par < 0 ? 0 : depth[static_cast<std::size_t>(par)] + 1);
    sign.push_back(s);
    return static_cast<int>(parent.size()) - 1;
  }
  void build(const SymbolNode& node, int par) {
    int id = add(par, node.sign);
    if (node.is_bundle()) {
      for (int i = 0; i < node.bundle; ++i) leaf_node.push_back(add(id, std::nullopt));
    } else {
      for (const auto& c : node.children) build(c, id);
    }
  }
  int lca(int a, int b) const {
    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) a = parent[static_cast<std::size_t>(a)];
    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) b = parent[static_cast<std::size_t>(b)];
    while (a != b) {
      a = parent[static_cast<std::size_t>(a)];
      b = parent[static_cast<std::size_t>(b)];
    }
    return a;
  }
};

std::optional<LabeledNode> decompose_rec(const TripleTable& t, const std::vector<int>& labels) {
  const int m = t.size();
  if (m <= 2) {
    LabeledNode leafs;
    leafs.leaves = labels;
    return leafs;
  }
  Partition classes = linking_equivalence_partition(t);
  if (classes.size() == 1) {
    int s = t.signs().front();
    for (auto e : t.signs()) {
      if (e != s) return std::nullopt;
    }
    LabeledNode b;
    b.sign = s;
    b.leaves = labels;
    return b;
  }
  if (static_cast<int>(classes.size()) == m) return std::nullopt;

  std::vector<int> reps;
  std::vector<int> rep_labels;
  std::vector<LabeledNode> class_nodes;
  for (const auto& cls : classes) {
    reps.push_back(cls.front());
    rep_labels.push_back(labels[static_cast<std::size_t>(cls.front())]);
    LabeledNode node;
    for (int a : cls) node.leaves.push_back(labels[static_cast<std::size_t>(a)]);
    if (cls.size() >= 2) {
      try {
        node.sign = class_epsilon(t, cls);
      } catch (const Error&) {
        return std::nullopt;
      }
    }
    class_nodes.push_back(std::move(node));
  }

  auto derived = decompose_rec(t.restricted(reps), rep_labels);
  if (!derived) return std::nullopt;

  auto substitute = [&](auto&& self, const LabeledNode& node) -> LabeledNode {
    if (!node.is_bundle()) {
      LabeledNode out;
      out.sign = node.sign;
      for (const auto& c : node.children) out.children.push_back(self(self, c));
      return out;
    }
    std::vector<LabeledNode> parts;
    for (int rep : node.leaves) {
      auto it = std::find(rep_labels.begin(), rep_labels.end(), rep);
      parts.push_back(class_nodes[static_cast<std::size_t>(it - rep_labels.begin())]);
    }
    if (parts.size() == 1) return parts.front();
    LabeledNode out;
    out.sign = node.sign;
    out.children = std::move(parts);
    return out;
  };
  return substitute(substitute, *derived);
}

}  // namespace

DecompSymbol::DecompSymbol(SymbolNode root) : root_(strip(canonicalize(with_dummy_labels(root)))) {}

DecompSymbol DecompSymbol::parse(std::string_view text) {
  return DecompSymbol(Parser(normalize_text(text)).parse_all());
}

std::string DecompSymbol::str() const { return render(root_); }

TripleTable symbol_to_table(const DecompSymbol& s) {
  FlatTree tree;
  tree.build(s.root(), -1);
  const int n = static_cast<int>(tree.leaf_node.size());
  std::vector<std::int8_t> signs;
  signs.reserve(static_cast<std::size_t>(binomial(n, 3)));
  for_each_triple(n, [&](int i, int j, int k) {
    int a = tree.leaf_node[static_cast<std::size_t>(i)];
    int b = tree.leaf_node[static_cast<std::size_t>(j)];
    int c = tree.leaf_node[static_cast<std::size_t>(k)];
    int best = tree.lca(a, b);
    for (int cand : {tree.lca(a, c), tree.lca(b, c)}) {
      if (tree.depth[static_cast<std::size_t>(cand)] > tree.depth[static_cast<std::size_t>(best)]) best = cand;
    }
    const auto& sg = tree.sign[static_cast<std::size_t>(best)];
    if (!sg) {
      throw Error(ErrorCode::MissingSign, "symbol " + s.str() + " needs a sign for leaves " +
                                              std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                              std::to_string(k + 1));
    }
    signs.push_back(static_cast<std::int8_t>(*sg));
  });
  return TripleTable::from_signs(n, std::move(signs));
}

std::optional<Decomposition> decompose_labeled(const TripleTable& t) {
  std::vector<int> labels(static_cast<std::size_t>(t.size()));
  std::iota(labels.begin(), labels.end(), 0);
  if (t.size() == 0) return std::nullopt;
  auto raw = decompose_rec(t, labels);
  if (!raw) return std::nullopt;
  LabeledNode canon = canonicalize(std::move(*raw));
  std::vector<int> leaf_labels;
  collect_leaves(canon, leaf_labels);
  DecompSymbol symbol(strip(canon));

  // Verify: the symbol's table, with leaves mapped back to their labels, is t.
  try {
    if (t.size() >= 3 && symbol_to_table(symbol).relabeled(leaf_labels) != t) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  return Decomposition{std::move(symbol), std::move(leaf_labels)};
}

std::optional<DecompSymbol> decompose(const TripleTable& t) {
  auto d = decompose_labeled(t);
  if (!d) return std::nullopt;
  return d->symbol;
}

}  // namespace skewlines
