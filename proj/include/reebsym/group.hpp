#pragma once

// Concrete finite groups with explicit elements: cyclic groups, direct
// products, wreath products with cyclic and with symmetric tops, and
// permutation groups. Used as a brute-force oracle for claims made at the
// level of expressions.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "reebsym/word.hpp"

namespace reebsym {

inline constexpr std::size_t kDefaultEnumerationCap = 20000;

/// A structurally serialized group element. Wreath coordinates are stored
/// 0-based; permutations are image vectors over {0..n-1}.
class GroupElement {
 public:
  enum class Kind : std::uint8_t { Unit, Residue, Tuple, CyclicWreath, SymWreath, Perm };

  GroupElement() = default;

  static GroupElement unit() { return {}; }
  static GroupElement residue(int r);
  static GroupElement tuple(std::vector<GroupElement> parts);
  static GroupElement cyclic_wreath(std::vector<GroupElement> coords, int shift);
  static GroupElement sym_wreath(std::vector<GroupElement> coords, std::vector<int> perm);
  static GroupElement permutation(std::vector<int> images);

  Kind kind() const noexcept { return kind_; }
  /// Residue value, or the shift of a cyclic-wreath element.
  int value() const noexcept { return value_; }
  /// Tuple factors or wreath coordinates.
  std::span<const GroupElement> parts() const noexcept { return parts_; }
  /// Top permutation of a sym-wreath element, or the images of a Perm.
  std::span<const int> perm() const noexcept { return perm_; }

  std::string to_string() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  Kind kind_ = Kind::Unit;
  int value_ = 0;
  std::vector<GroupElement> parts_;
  std::vector<int> perm_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& e) const noexcept { return e.hash(); }
};

class ConcreteGroup {
 public:
  const GroupElement& identity() const;
  const std::vector<GroupElement>& generators() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement invert(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, long long k) const;
  /// Smallest k >= 1 with a^k = identity.
  long long element_order(const GroupElement& a) const;

  /// All elements, as the closure of the generators under right
  /// multiplication, starting from the identity. Memoized and thread-safe.
  /// Throws CapExceeded once more than `cap` elements have been found.
  const std::vector<GroupElement>& elements(std::size_t cap = kDefaultEnumerationCap) const;
  std::size_t order(std::size_t cap = kDefaultEnumerationCap) const {
    return elements(cap).size();
  }

  /// Short structural description, e.g. "(Z2 x Z3) wr Z2".
  std::string describe() const;

  struct Impl;

 private:
  explicit ConcreteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend ConcreteGroup trivial_group();
  friend ConcreteGroup make_cyclic(int n);
  friend ConcreteGroup product_group(const ConcreteGroup& g, const ConcreteGroup& h);
  friend ConcreteGroup wreath_cyclic(const ConcreteGroup& a, int n);
  friend ConcreteGroup wreath_sym(const ConcreteGroup& a, int n);
  friend ConcreteGroup permutation_group(int degree, std::vector<std::vector<int>> generators);
};

ConcreteGroup trivial_group();
/// Residues mod n under addition. Throws InvalidArgument for n <= 0.
ConcreteGroup make_cyclic(int n);
ConcreteGroup product_group(const ConcreteGroup& g, const ConcreteGroup& h);

/// A wr Z_n with
///   (a_0..a_{n-1}; k)(b_0..b_{n-1}; l) = (a_l b_0, a_{l+1} b_1, ..., a_{l-1} b_{n-1}; k+l),
/// indices mod n.
ConcreteGroup wreath_cyclic(const ConcreteGroup& a, int n);

/// A wr_{X_n} S_n = Map(X_n, A) x| S_n with
///   (alpha1, h1)(alpha2, h2) = (alpha1^{h2} alpha2, h1 o h2),  alpha^h = alpha o h.
ConcreteGroup wreath_sym(const ConcreteGroup& a, int n);

/// Subgroup of S_degree generated by the given image vectors; the product
/// is composition (x*y)(i) = x(y(i)).
ConcreteGroup permutation_group(int degree, std::vector<std::vector<int>> generators);

/// Builds the group denoted by an expression. Throws CapExceeded when the
/// predicted order is above `cap`.
ConcreteGroup realize_concrete(const GroupExpr& expr, std::size_t cap = kDefaultEnumerationCap);
ConcreteGroup realize_concrete(const SymExpr& expr, std::size_t cap = kDefaultEnumerationCap);

/// Brute-force isomorphism test: invariant screening, then backtracking over
/// images of a small generating set with homomorphism checks on the
/// subgroup generated so far.
bool are_isomorphic(const ConcreteGroup& g, const ConcreteGroup& h,
                    std::size_t cap = kDefaultEnumerationCap);

bool is_abelian(const ConcreteGroup& g);

/// A finite abelian group Z_{d1} x ... x Z_{dk} with d1 | d2 | ... | dk and
/// every di >= 2. The empty list is the trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  /// Throws InvalidArgument unless the list is a divisibility chain of
  /// integers >= 2.
  static AbelianGroup from_invariant_factors(std::vector<std::int64_t> factors);
  /// Any list of cyclic orders >= 1, brought to invariant-factor form.
  static AbelianGroup from_cyclic_factors(const std::vector<std::int64_t>& orders);

  const std::vector<std::int64_t>& invariant_factors() const noexcept { return factors_; }
  std::int64_t order() const;
  bool is_trivial() const noexcept { return factors_.empty(); }
  bool is_cyclic() const noexcept { return factors_.size() <= 1; }
  /// The p-primary direct factor.
  AbelianGroup primary_component(std::int64_t p) const;
  std::string to_string() const;
  ConcreteGroup to_concrete() const;

 private:
  std::vector<std::int64_t> factors_;
};

/// True iff x -> x^n is a bijection of C, i.e. gcd(n, |C|) = 1. Groups of
/// order <= 1000 are additionally checked by exhaustive evaluation.
bool has_unique_nth_roots(const AbelianGroup& c, std::int64_t n);

struct MembershipVerdict {
  enum class Kind { Member, NonMember, Unknown };
  static constexpr std::string_view kNoUniqueRootsFactor = "no-unique-roots-factor";
  static constexpr std::string_view kTopNotCyclic = "top-not-cyclic";

  Kind kind = Kind::Unknown;
  /// NonMember: the failed criteria. Unknown: a single explanation.
  std::vector<std::string> reasons;

  std::string to_string() const;
};

/// Decides whether base wr top lies in the family generated from the trivial
/// group by direct products and wreaths with cyclic tops, using only the
/// decomposability and wreath-uniqueness criteria:
///  - cyclic top: Member;
///  - no primary factor of base has unique |top|-th roots and top is not
///    cyclic: NonMember with both reasons;
///  - otherwise Unknown.
/// Throws InvalidArgument for a trivial base or top.
MembershipVerdict wreath_membership(const AbelianGroup& base, const AbelianGroup& top);

}  // namespace reebsym
