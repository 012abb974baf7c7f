#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewlines/triple_table.hpp"

namespace skewlines {

/// Node of a decomposition symbol.
///
/// A bundle node <eps p> stands for p lines of one ruling (p leaf lines, no
/// child nodes). A composite node <eps A1,...,Ak> has k >= 2 child nodes. The sign
/// is optional where the notation allows omitting it.
struct SymbolNode {
  std::optional<int> sign;
  int bundle = 0;
  std::vector<SymbolNode> children;

  bool is_bundle() const { return bundle > 0; }
  int leaf_count() const;

  friend bool operator==(const SymbolNode&, const SymbolNode&) = default;
};

/// Canonical (child-sorted) decomposition symbol, e.g. "<+<1>,<-2>,<-2>>".
///
/// Grammar: node := '<' sign? (INT | item (',' item)*) '>', item := node | INT.
/// Children sort by leaf count, bundles before composites, then + before - before
/// unsigned, then recursively.
class DecompSymbol {
 public:
  /// Throws ParseError on a structurally invalid tree.
  explicit DecompSymbol(SymbolNode root);

  /// Also accepts the angle brackets U+27E8/U+27E9 and the minus sign U+2212.
  static DecompSymbol parse(std::string_view text);

  const SymbolNode& root() const { return root_; }
  int leaf_count() const { return root_.leaf_count(); }
  std::string str() const;

  friend bool operator==(const DecompSymbol&, const DecompSymbol&) = default;

 private:
  SymbolNode root_;
};

/// Entry for three leaves (labelled in depth-first order) is the sign of the
/// deepest node that is the common ancestor of at least two of them.
/// Throws MissingSign when that node is unsigned.
TripleTable symbol_to_table(const DecompSymbol& s);

struct Decomposition {
  DecompSymbol symbol;
  /// leaf_labels[i] is the table label of the i-th leaf in depth-first order.
  std::vector<int> leaf_labels;
};

/// Repeatedly passes to the derived table; nullopt means not completely
/// decomposable. Every returned symbol reproduces the input table exactly.
std::optional<Decomposition> decompose_labeled(const TripleTable& t);
std::optional<DecompSymbol> decompose(const TripleTable& t);

}  // namespace skewlines
