#include "reebsym/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <set>

#include "reebsym/error.hpp"

namespace reebsym {

template <class Top>
BasicExpr<Top>::BasicExpr() : node_(unit().node_) {}

template <class Top>
BasicExpr<Top> BasicExpr<Top>::unit() {
  static const auto kUnit = std::make_shared<const Node>();
  return BasicExpr(kUnit);
}

template <class Top>
BasicExpr<Top> BasicExpr<Top>::prod(std::vector<BasicExpr> factors) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Prod;
  node->children = std::move(factors);
  return BasicExpr(std::move(node));
}

template <class Top>
BasicExpr<Top> BasicExpr<Top>::wr(BasicExpr base, int n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "wreath exponent must be >= 1, got " + std::to_string(n));
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Wr;
  node->n = n;
  node->children.push_back(std::move(base));
  return BasicExpr(std::move(node));
}

template <class Top>
bool BasicExpr<Top>::structurally_equal(const BasicExpr& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind || node_->n != other.node_->n) return false;
  return std::equal(node_->children.begin(), node_->children.end(),
                    other.node_->children.begin(), other.node_->children.end());
}

namespace {

template <class Top>
class WordParser {
 public:
  using Expr = BasicExpr<Top>;

  explicit WordParser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  // W ::= "1" | "(" W ")" [ ("x" "(" W ")")+ | TOP ]
  Expr word() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected '1' or '('");
    if (text_[pos_] == '1') {
      ++pos_;
      return Expr::unit();
    }
    if (text_[pos_] != '(') fail("expected '1' or '('");
    Expr first = parenthesized();
    skip_space();
    if (accept('x')) {
      std::vector<Expr> factors{first};
      do {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
        factors.push_back(parenthesized());
        skip_space();
      } while (accept('x'));
      return Expr::prod(std::move(factors));
    }
    if (accept_keyword(Top::prefix)) {
      const std::size_t at = pos_;
      const int n = integer();
      if (n < 1) {
        pos_ = at;
        fail("wreath exponent must be >= 1");
      }
      if (!Top::suffix.empty() && !accept_keyword(Top::suffix)) {
        fail("expected '" + std::string(Top::suffix) + "'");
      }
      if (n == 1) return first;
      return Expr::wr(std::move(first), n);
    }
    return first;
  }

  Expr parenthesized() {
    ++pos_;  // '('
    Expr inner = word();
    skip_space();
    if (!accept(')')) fail("expected ')'");
    return inner;
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected integer");
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) {
      pos_ = start;
      fail("integer out of range");
    }
    return value;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // Keywords may contain inner whitespace, e.g. "wr Z 3".
  bool accept_keyword(std::string_view kw) {
    std::size_t p = pos_;
    for (char c : kw) {
      while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
      if (p >= text_.size() || text_[p] != c) return false;
      ++p;
    }
    pos_ = p;
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class Top>
void print_into(const BasicExpr<Top>& e, std::string& out) {
  using Kind = typename BasicExpr<Top>::Kind;
  switch (e.kind()) {
    case Kind::Unit:
      out += '1';
      return;
    case Kind::Prod: {
      bool first = true;
      for (const auto& f : e.factors()) {
        if (!first) out += 'x';
        first = false;
        out += '(';
        print_into(f, out);
        out += ')';
      }
      if (first) out += '1';  // empty product
      return;
    }
    case Kind::Wr:
      out += '(';
      print_into(e.base(), out);
      out += ')';
      out += Top::prefix;
      out += std::to_string(e.exponent());
      out += Top::suffix;
      return;
  }
}

}  // namespace

template <class Top>
BasicExpr<Top> parse_expr(std::string_view text) {
  return WordParser<Top>(text).parse();
}

template <class Top>
std::string print_word(const BasicExpr<Top>& expr) {
  std::string out;
  print_into(expr, out);
  return out;
}

template <class Top>
BasicExpr<Top> normalize(const BasicExpr<Top>& expr) {
  using Expr = BasicExpr<Top>;
  using Kind = typename Expr::Kind;
  switch (expr.kind()) {
    case Kind::Unit:
      return expr;
    case Kind::Wr: {
      Expr base = normalize(expr.base());
      if (expr.exponent() == 1) return base;
      return Expr::wr(std::move(base), expr.exponent());
    }
    case Kind::Prod: {
      std::vector<std::pair<std::string, Expr>> keyed;
      for (const auto& f : expr.factors()) {
        Expr nf = normalize(f);
        if (nf.is_unit()) continue;
        if (nf.kind() == Kind::Prod) {
          for (const auto& g : nf.factors()) keyed.emplace_back(print_word(g), g);
        } else {
          keyed.emplace_back(print_word(nf), nf);
        }
      }
      if (keyed.empty()) return Expr::unit();
      if (keyed.size() == 1) return keyed.front().second;
      std::stable_sort(keyed.begin(), keyed.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<Expr> factors;
      factors.reserve(keyed.size());
      for (auto& [key, f] : keyed) factors.push_back(std::move(f));
      return Expr::prod(std::move(factors));
    }
  }
  return expr;
}

template <class Top>
BigInt expr_order(const BasicExpr<Top>& expr) {
  using Kind = typename BasicExpr<Top>::Kind;
  switch (expr.kind()) {
    case Kind::Unit:
      return 1;
    case Kind::Prod: {
      BigInt order = 1;
      for (const auto& f : expr.factors()) order *= expr_order(f);
      return order;
    }
    case Kind::Wr: {
      const BigInt base = expr_order(expr.base());
      return boost::multiprecision::pow(base, static_cast<unsigned>(expr.exponent())) *
             Top::top_order(expr.exponent());
    }
  }
  return 1;
}

template <class Top>
int wreath_count(const BasicExpr<Top>& expr) {
  using Kind = typename BasicExpr<Top>::Kind;
  int count = expr.kind() == Kind::Wr ? 1 : 0;
  for (const auto& f : expr.factors()) count += wreath_count(f);
  return count;
}

bool is_simple_class(const GroupExpr& expr) {
  if (expr.kind() == GroupExpr::Kind::Wr && expr.exponent() != 2) {
    // Wr(A,1) is A itself, so it does not introduce a new letter.
    if (expr.exponent() != 1) return false;
  }
  for (const auto& f : expr.factors()) {
    if (!is_simple_class(f)) return false;
  }
  return true;
}

namespace {

constexpr int kEnumMinExponent = 2;
constexpr int kEnumMaxExponent = 5;

// Multisets of wreath-rooted atoms whose wreath counts sum to `budget`,
// drawn in non-decreasing atom index order starting at `from`.
void collect_products(const std::vector<std::pair<int, GroupExpr>>& atoms, std::size_t from,
                      int budget, std::vector<GroupExpr>& current,
                      std::vector<GroupExpr>& out) {
  if (budget == 0) {
    if (current.size() >= 2) out.push_back(normalize(GroupExpr::prod(current)));
    return;
  }
  for (std::size_t i = from; i < atoms.size(); ++i) {
    const auto& [cost, atom] = atoms[i];
    if (cost > budget) continue;
    current.push_back(atom);
    collect_products(atoms, i, budget - cost, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<GroupExpr> enumerate_exprs(int max_wreaths) {
  if (max_wreaths < 0) {
    throw Error(ErrorCode::InvalidArgument, "max node count must be >= 0");
  }
  // by_count[c] = all normalized expressions with exactly c wreaths.
  std::vector<std::vector<GroupExpr>> by_count(static_cast<std::size_t>(max_wreaths) + 1);
  by_count[0].push_back(GroupExpr::unit());
  std::vector<std::pair<int, GroupExpr>> atoms;  // (wreath count, Wr-rooted expr)
  for (int c = 1; c <= max_wreaths; ++c) {
    std::vector<GroupExpr> level;
    for (const auto& inner : by_count[static_cast<std::size_t>(c - 1)]) {
      for (int n = kEnumMinExponent; n <= kEnumMaxExponent; ++n) {
        level.push_back(GroupExpr::wr(inner, n));
      }
    }
    for (const auto& w : level) atoms.emplace_back(c, w);
    std::vector<GroupExpr> current;
    collect_products(atoms, 0, c, current, level);

    std::map<std::string, GroupExpr> unique;
    for (auto& e : level) unique.emplace(print_word(e), std::move(e));
    auto& bucket = by_count[static_cast<std::size_t>(c)];
    for (auto& [key, e] : unique) bucket.push_back(std::move(e));
  }
  std::vector<GroupExpr> all;
  for (auto& bucket : by_count) {
    for (auto& e : bucket) all.push_back(std::move(e));
  }
  return all;
}

template class BasicExpr<CyclicTop>;
template class BasicExpr<SymmetricTop>;
template GroupExpr parse_expr<CyclicTop>(std::string_view);
template SymExpr parse_expr<SymmetricTop>(std::string_view);
template std::string print_word(const GroupExpr&);
template std::string print_word(const SymExpr&);
template GroupExpr normalize(const GroupExpr&);
template SymExpr normalize(const SymExpr&);
template BigInt expr_order(const GroupExpr&);
template BigInt expr_order(const SymExpr&);
template int wreath_count(const GroupExpr&);
template int wreath_count(const SymExpr&);

}  // namespace reebsym
