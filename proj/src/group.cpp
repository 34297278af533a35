#include "reebsym/group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "reebsym/error.hpp"

namespace reebsym {

// ---------------------------------------------------------------------------
// GroupElement

GroupElement GroupElement::residue(int r) {
  GroupElement e;
  e.kind_ = Kind::Residue;
  e.value_ = r;
  return e;
}

GroupElement GroupElement::tuple(std::vector<GroupElement> parts) {
  GroupElement e;
  e.kind_ = Kind::Tuple;
  e.parts_ = std::move(parts);
  return e;
}

GroupElement GroupElement::cyclic_wreath(std::vector<GroupElement> coords, int shift) {
  GroupElement e;
  e.kind_ = Kind::CyclicWreath;
  e.value_ = shift;
  e.parts_ = std::move(coords);
  return e;
}

GroupElement GroupElement::sym_wreath(std::vector<GroupElement> coords, std::vector<int> perm) {
  GroupElement e;
  e.kind_ = Kind::SymWreath;
  e.parts_ = std::move(coords);
  e.perm_ = std::move(perm);
  return e;
}

GroupElement GroupElement::permutation(std::vector<int> images) {
  GroupElement e;
  e.kind_ = Kind::Perm;
  e.perm_ = std::move(images);
  return e;
}

namespace {

void join_ints(std::span<const int> xs, std::string& out) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i]);
  }
}

void write_element(const GroupElement& e, std::string& out) {
  using K = GroupElement::Kind;
  switch (e.kind()) {
    case K::Unit:
      out += 'e';
      return;
    case K::Residue:
      out += std::to_string(e.value());
      return;
    case K::Tuple:
    case K::CyclicWreath:
    case K::SymWreath: {
      out += e.kind() == K::Tuple ? '(' : '[';
      for (std::size_t i = 0; i < e.parts().size(); ++i) {
        if (i) out += ',';
        write_element(e.parts()[i], out);
      }
      if (e.kind() == K::CyclicWreath) {
        out += ';';
        out += std::to_string(e.value());
      } else if (e.kind() == K::SymWreath) {
        out += ";p=";
        join_ints(e.perm(), out);
      }
      out += e.kind() == K::Tuple ? ')' : ']';
      return;
    }
    case K::Perm:
      out += "<";
      join_ints(e.perm(), out);
      out += ">";
      return;
  }
}

inline void hash_mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

std::string GroupElement::to_string() const {
  std::string out;
  write_element(*this, out);
  return out;
}

std::size_t GroupElement::hash() const noexcept {
  std::size_t seed = static_cast<std::size_t>(kind_) * 31u + static_cast<std::size_t>(value_);
  for (const auto& p : parts_) hash_mix(seed, p.hash());
  for (int v : perm_) hash_mix(seed, static_cast<std::size_t>(v));
  return seed;
}

// ---------------------------------------------------------------------------
// ConcreteGroup

struct ConcreteGroup::Impl {
  enum class Kind { Trivial, Cyclic, Product, CyclicWreath, SymWreath, Perm };

  Kind kind = Kind::Trivial;
  int n = 1;  // modulus, wreath width, or permutation degree
  std::vector<ConcreteGroup> parts;
  GroupElement identity;
  std::vector<GroupElement> generators;

  mutable std::mutex cache_mutex;
  mutable bool enumerated = false;
  mutable std::vector<GroupElement> elements;
};

namespace {

using Impl = ConcreteGroup::Impl;

std::vector<int> identity_perm(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

const GroupElement& ConcreteGroup::identity() const { return impl_->identity; }

const std::vector<GroupElement>& ConcreteGroup::generators() const { return impl_->generators; }

GroupElement ConcreteGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  const Impl& g = *impl_;
  switch (g.kind) {
    case Impl::Kind::Trivial:
      return GroupElement::unit();
    case Impl::Kind::Cyclic:
      return GroupElement::residue((a.value() + b.value()) % g.n);
    case Impl::Kind::Product: {
      std::vector<GroupElement> parts;
      parts.reserve(2);
      parts.push_back(g.parts[0].multiply(a.parts()[0], b.parts()[0]));
      parts.push_back(g.parts[1].multiply(a.parts()[1], b.parts()[1]));
      return GroupElement::tuple(std::move(parts));
    }
    case Impl::Kind::CyclicWreath: {
      const auto n = static_cast<std::size_t>(g.n);
      const auto l = static_cast<std::size_t>(b.value());
      std::vector<GroupElement> coords;
      coords.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        coords.push_back(g.parts[0].multiply(a.parts()[(i + l) % n], b.parts()[i]));
      }
      return GroupElement::cyclic_wreath(std::move(coords), (a.value() + b.value()) % g.n);
    }
    case Impl::Kind::SymWreath: {
      const auto n = static_cast<std::size_t>(g.n);
      const auto h1 = a.perm();
      const auto h2 = b.perm();
      std::vector<GroupElement> coords;
      coords.reserve(n);
      std::vector<int> perm(n);
      for (std::size_t i = 0; i < n; ++i) {
        const auto hi = static_cast<std::size_t>(h2[i]);
        coords.push_back(g.parts[0].multiply(a.parts()[hi], b.parts()[i]));
        perm[i] = h1[hi];
      }
      return GroupElement::sym_wreath(std::move(coords), std::move(perm));
    }
    case Impl::Kind::Perm: {
      const auto x = a.perm();
      const auto y = b.perm();
      std::vector<int> perm(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) perm[i] = x[static_cast<std::size_t>(y[i])];
      return GroupElement::permutation(std::move(perm));
    }
  }
  return GroupElement::unit();
}

GroupElement ConcreteGroup::invert(const GroupElement& a) const {
  const Impl& g = *impl_;
  switch (g.kind) {
    case Impl::Kind::Trivial:
      return GroupElement::unit();
    case Impl::Kind::Cyclic:
      return GroupElement::residue((g.n - a.value()) % g.n);
    case Impl::Kind::Product:
      return GroupElement::tuple({g.parts[0].invert(a.parts()[0]), g.parts[1].invert(a.parts()[1])});
    case Impl::Kind::CyclicWreath: {
      // (alpha; k)^-1 = (beta; -k) with beta_i = alpha_{i-k}^-1
      const int n = g.n;
      const int k = a.value();
      std::vector<GroupElement> coords;
      coords.reserve(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        coords.push_back(g.parts[0].invert(a.parts()[static_cast<std::size_t>(((i - k) % n + n) % n)]));
      }
      return GroupElement::cyclic_wreath(std::move(coords), (n - k) % n);
    }
    case Impl::Kind::SymWreath: {
      // (alpha, h)^-1 = (beta, h^-1) with beta_i = alpha_{h^-1(i)}^-1
      const auto n = static_cast<std::size_t>(g.n);
      std::vector<int> inv(n);
      for (std::size_t i = 0; i < n; ++i) inv[static_cast<std::size_t>(a.perm()[i])] = static_cast<int>(i);
      std::vector<GroupElement> coords;
      coords.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        coords.push_back(g.parts[0].invert(a.parts()[static_cast<std::size_t>(inv[i])]));
      }
      return GroupElement::sym_wreath(std::move(coords), std::move(inv));
    }
    case Impl::Kind::Perm: {
      std::vector<int> inv(a.perm().size());
      for (std::size_t i = 0; i < inv.size(); ++i) inv[static_cast<std::size_t>(a.perm()[i])] = static_cast<int>(i);
      return GroupElement::permutation(std::move(inv));
    }
  }
  return GroupElement::unit();
}

GroupElement ConcreteGroup::power(const GroupElement& a, long long k) const {
  GroupElement base = k < 0 ? invert(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  GroupElement result = identity();
  while (e) {
    if (e & 1u) result = multiply(result, base);
    e >>= 1u;
    if (e) base = multiply(base, base);
  }
  return result;
}

long long ConcreteGroup::element_order(const GroupElement& a) const {
  long long k = 1;
  GroupElement x = a;
  while (!(x == identity())) {
    x = multiply(x, a);
    ++k;
  }
  return k;
}

const std::vector<GroupElement>& ConcreteGroup::elements(std::size_t cap) const {
  const Impl& g = *impl_;
  std::lock_guard lock(g.cache_mutex);
  if (g.enumerated) {
    if (g.elements.size() > cap) {
      throw Error(ErrorCode::CapExceeded, describe() + " has " + std::to_string(g.elements.size()) +
                                              " elements, above cap " + std::to_string(cap));
    }
    return g.elements;
  }
  std::vector<GroupElement> found{identity()};
  std::unordered_set<GroupElement, GroupElementHash> seen{identity()};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& gen : g.generators) {
      GroupElement y = multiply(found[head], gen);
      if (seen.insert(y).second) {
        found.push_back(std::move(y));
        if (found.size() > cap) {
          throw Error(ErrorCode::CapExceeded,
                      describe() + " has more than " + std::to_string(cap) + " elements");
        }
      }
    }
  }
  g.elements = std::move(found);
  g.enumerated = true;
  return g.elements;
}

std::string ConcreteGroup::describe() const {
  const Impl& g = *impl_;
  switch (g.kind) {
    case Impl::Kind::Trivial:
      return "1";
    case Impl::Kind::Cyclic:
      return "Z" + std::to_string(g.n);
    case Impl::Kind::Product:
      return "(" + g.parts[0].describe() + " x " + g.parts[1].describe() + ")";
    case Impl::Kind::CyclicWreath:
      return "(" + g.parts[0].describe() + " wr Z" + std::to_string(g.n) + ")";
    case Impl::Kind::SymWreath:
      return "(" + g.parts[0].describe() + " wr_X" + std::to_string(g.n) + " S" + std::to_string(g.n) + ")";
    case Impl::Kind::Perm:
      return "Perm(" + std::to_string(g.n) + ", " + std::to_string(g.generators.size()) + " gens)";
  }
  return "?";
}

ConcreteGroup trivial_group() {
  static const auto kTrivial = [] {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::Trivial;
    return std::shared_ptr<const Impl>(std::move(impl));
  }();
  return ConcreteGroup(kTrivial);
}

ConcreteGroup make_cyclic(int n) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "cyclic group order must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Cyclic;
  impl->n = n;
  impl->identity = GroupElement::residue(0);
  if (n > 1) impl->generators.push_back(GroupElement::residue(1));
  return ConcreteGroup(std::move(impl));
}

ConcreteGroup product_group(const ConcreteGroup& g, const ConcreteGroup& h) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Product;
  impl->parts = {g, h};
  impl->identity = GroupElement::tuple({g.identity(), h.identity()});
  for (const auto& x : g.generators()) impl->generators.push_back(GroupElement::tuple({x, h.identity()}));
  for (const auto& y : h.generators()) impl->generators.push_back(GroupElement::tuple({g.identity(), y}));
  return ConcreteGroup(std::move(impl));
}

ConcreteGroup wreath_cyclic(const ConcreteGroup& a, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "wreath width must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::CyclicWreath;
  impl->n = n;
  impl->parts = {a};
  const std::vector<GroupElement> ones(static_cast<std::size_t>(n), a.identity());
  impl->identity = GroupElement::cyclic_wreath(ones, 0);
  for (const auto& x : a.generators()) {
    auto coords = ones;
    coords[0] = x;
    impl->generators.push_back(GroupElement::cyclic_wreath(std::move(coords), 0));
  }
  if (n > 1) impl->generators.push_back(GroupElement::cyclic_wreath(ones, 1));
  return ConcreteGroup(std::move(impl));
}

ConcreteGroup wreath_sym(const ConcreteGroup& a, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "wreath width must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::SymWreath;
  impl->n = n;
  impl->parts = {a};
  const std::vector<GroupElement> ones(static_cast<std::size_t>(n), a.identity());
  impl->identity = GroupElement::sym_wreath(ones, identity_perm(n));
  for (const auto& x : a.generators()) {
    auto coords = ones;
    coords[0] = x;
    impl->generators.push_back(GroupElement::sym_wreath(std::move(coords), identity_perm(n)));
  }
  if (n >= 2) {
    auto swap = identity_perm(n);
    std::swap(swap[0], swap[1]);
    impl->generators.push_back(GroupElement::sym_wreath(ones, std::move(swap)));
  }
  if (n >= 3) {
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    impl->generators.push_back(GroupElement::sym_wreath(ones, std::move(cycle)));
  }
  return ConcreteGroup(std::move(impl));
}

ConcreteGroup permutation_group(int degree, std::vector<std::vector<int>> generators) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "permutation degree must be >= 0");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Perm;
  impl->n = degree;
  impl->identity = GroupElement::permutation(identity_perm(degree));
  for (auto& p : generators) {
    std::vector<bool> hit(static_cast<std::size_t>(degree), false);
    bool ok = p.size() == static_cast<std::size_t>(degree);
    for (int v : p) {
      if (!ok) break;
      ok = v >= 0 && v < degree && !hit[static_cast<std::size_t>(v)];
      if (ok) hit[static_cast<std::size_t>(v)] = true;
    }
    if (!ok) throw Error(ErrorCode::InvalidArgument, "generator is not a permutation");
    impl->generators.push_back(GroupElement::permutation(std::move(p)));
  }
  return ConcreteGroup(std::move(impl));
}

namespace {

template <class Top>
ConcreteGroup realize_rec(const BasicExpr<Top>& e) {
  using Kind = typename BasicExpr<Top>::Kind;
  switch (e.kind()) {
    case Kind::Unit:
      return trivial_group();
    case Kind::Prod: {
      if (e.factors().empty()) return trivial_group();
      ConcreteGroup acc = realize_rec(e.factors()[0]);
      for (std::size_t i = 1; i < e.factors().size(); ++i) {
        acc = product_group(acc, realize_rec(e.factors()[i]));
      }
      return acc;
    }
    case Kind::Wr:
      if constexpr (std::is_same_v<Top, CyclicTop>) {
        return wreath_cyclic(realize_rec(e.base()), e.exponent());
      } else {
        return wreath_sym(realize_rec(e.base()), e.exponent());
      }
  }
  return trivial_group();
}

template <class Top>
ConcreteGroup realize_checked(const BasicExpr<Top>& e, std::size_t cap) {
  const BigInt order = expr_order(e);
  if (order > cap) {
    throw Error(ErrorCode::CapExceeded, print_word(e) + " has order " + order.str() +
                                            ", above cap " + std::to_string(cap));
  }
  return realize_rec(e);
}

}  // namespace

ConcreteGroup realize_concrete(const GroupExpr& expr, std::size_t cap) {
  return realize_checked(expr, cap);
}

ConcreteGroup realize_concrete(const SymExpr& expr, std::size_t cap) {
  return realize_checked(expr, cap);
}

bool is_abelian(const ConcreteGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!(g.multiply(gens[i], gens[j]) == g.multiply(gens[j], gens[i]))) return false;
    }
  }
  return true;
}

}  // namespace reebsym
