#pragma once

// Admissible words: the expression language built from the trivial group,
// direct products and wreath products with a transitive top group.
//
// GroupExpr uses cyclic tops (A wr Z_n, printed "(A)wrZn"); SymExpr uses the
// natural action of the symmetric group on n points (A wr_{X_n} S_n, printed
// "(A)SnX"). Both share one immutable AST representation.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace reebsym {

using BigInt = boost::multiprecision::cpp_int;

struct CyclicTop {
  static constexpr std::string_view prefix = "wrZ";
  static constexpr std::string_view suffix = "";
  /// |Z_n|
  static BigInt top_order(int n) { return BigInt(n); }
};

struct SymmetricTop {
  static constexpr std::string_view prefix = "S";
  static constexpr std::string_view suffix = "X";
  /// |S_n| = n!
  static BigInt top_order(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  }
};

template <class Top>
class BasicExpr {
 public:
  enum class Kind { Unit, Prod, Wr };

  /// Defaults to the trivial group.
  BasicExpr();

  static BasicExpr unit();
  static BasicExpr prod(std::vector<BasicExpr> factors);
  /// Throws InvalidArgument for n < 1.
  static BasicExpr wr(BasicExpr base, int n);

  Kind kind() const noexcept { return node_->kind; }
  bool is_unit() const noexcept { return kind() == Kind::Unit; }
  std::span<const BasicExpr> factors() const noexcept { return node_->children; }
  /// Valid only for Kind::Wr.
  const BasicExpr& base() const { return node_->children.front(); }
  int exponent() const noexcept { return node_->n; }

  friend bool operator==(const BasicExpr& a, const BasicExpr& b) {
    return a.structurally_equal(b);
  }

 private:
  struct Node {
    Kind kind = Kind::Unit;
    int n = 0;
    std::vector<BasicExpr> children;
  };

  explicit BasicExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  bool structurally_equal(const BasicExpr& other) const;

  std::shared_ptr<const Node> node_;
};

using GroupExpr = BasicExpr<CyclicTop>;
using SymExpr = BasicExpr<SymmetricTop>;

/// Parses an admissible word. Redundant parentheses vanish; "(A)wrZ1" parses
/// to A. Products may be chained: "(A)x(B)x(C)" is one three-factor product.
/// Throws SyntaxError carrying the byte offset of the first bad token.
template <class Top>
BasicExpr<Top> parse_expr(std::string_view text);

inline GroupExpr parse_word(std::string_view text) {
  return parse_expr<CyclicTop>(text);
}
inline SymExpr parse_sym_word(std::string_view text) {
  return parse_expr<SymmetricTop>(text);
}

/// Inverse of parse_expr: parse_expr(print_word(e)) == e structurally.
template <class Top>
std::string print_word(const BasicExpr<Top>& expr);

/// Structural normal form: units dropped, products flattened and sorted by
/// the printed form of their factors, single-factor products and Z_1 / S_1
/// wreaths collapsed. Idempotent.
template <class Top>
BasicExpr<Top> normalize(const BasicExpr<Top>& expr);

/// Exact group order: |A x B| = |A||B|, |A wr T_n| = |A|^n |T_n|.
template <class Top>
BigInt expr_order(const BasicExpr<Top>& expr);

/// Number of Wr nodes in the expression.
template <class Top>
int wreath_count(const BasicExpr<Top>& expr);

/// True iff every wreath exponent is exactly 2, i.e. the word is over the
/// two-letter-top alphabet and denotes a group reachable from simple Morse
/// functions.
bool is_simple_class(const GroupExpr& expr);

/// All normalized expressions with at most `max_wreaths` Wr nodes and wreath
/// exponents in {2,3,4,5}, without duplicates, ordered by (wreath count,
/// printed word). Products carry no separate budget: every product factor
/// is nontrivial and so spends at least one wreath.
std::vector<GroupExpr> enumerate_exprs(int max_wreaths);

}  // namespace reebsym
