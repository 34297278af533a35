#include <algorithm>
#include <map>
#include <numeric>

#include "reebsym/error.hpp"
#include "reebsym/group.hpp"

namespace reebsym {

namespace {

std::map<std::int64_t, int> factorize(std::int64_t n) {
  std::map<std::int64_t, int> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

constexpr std::int64_t kBruteForceRootsLimit = 1000;

}  // namespace

AbelianGroup AbelianGroup::from_invariant_factors(std::vector<std::int64_t> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) {
      throw Error(ErrorCode::InvalidArgument, "invariant factors must be >= 2");
    }
    if (i > 0 && factors[i] % factors[i - 1] != 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "invariant factors must form a divisibility chain: " +
                      std::to_string(factors[i - 1]) + " does not divide " +
                      std::to_string(factors[i]));
    }
  }
  AbelianGroup g;
  g.factors_ = std::move(factors);
  return g;
}

AbelianGroup AbelianGroup::from_cyclic_factors(const std::vector<std::int64_t>& orders) {
  std::map<std::int64_t, std::vector<std::int64_t>> powers;  // prime -> prime powers
  for (std::int64_t d : orders) {
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "cyclic factor orders must be >= 1");
    for (const auto& [p, e] : factorize(d)) powers[p].push_back(ipow(p, e));
  }
  std::size_t width = 0;
  for (auto& [p, list] : powers) {
    std::sort(list.begin(), list.end(), std::greater<>());
    width = std::max(width, list.size());
  }
  // Largest invariant factor first, then reversed into ascending order.
  std::vector<std::int64_t> factors(width, 1);
  for (const auto& [p, list] : powers) {
    for (std::size_t i = 0; i < list.size(); ++i) factors[i] *= list[i];
  }
  std::reverse(factors.begin(), factors.end());
  return from_invariant_factors(std::move(factors));
}

std::int64_t AbelianGroup::order() const {
  std::int64_t n = 1;
  for (auto d : factors_) n *= d;
  return n;
}

AbelianGroup AbelianGroup::primary_component(std::int64_t p) const {
  std::vector<std::int64_t> parts;
  for (auto d : factors_) {
    std::int64_t q = 1;
    while (d % p == 0) {
      d /= p;
      q *= p;
    }
    if (q > 1) parts.push_back(q);
  }
  return from_invariant_factors(std::move(parts));
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " x ";
    out += "Z" + std::to_string(factors_[i]);
  }
  return out;
}

ConcreteGroup AbelianGroup::to_concrete() const {
  if (factors_.empty()) return trivial_group();
  ConcreteGroup g = make_cyclic(static_cast<int>(factors_[0]));
  for (std::size_t i = 1; i < factors_.size(); ++i) {
    g = product_group(g, make_cyclic(static_cast<int>(factors_[i])));
  }
  return g;
}

bool has_unique_nth_roots(const AbelianGroup& c, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "root degree must be >= 1");
  const std::int64_t order = c.order();
  const bool by_gcd = std::gcd(n, order) == 1;
  if (order <= kBruteForceRootsLimit) {
    // x -> n*x is injective on the mixed-radix enumeration of C.
    const auto& f = c.invariant_factors();
    std::vector<char> hit(static_cast<std::size_t>(order), 0);
    bool injective = true;
    for (std::int64_t x = 0; x < order && injective; ++x) {
      std::int64_t rest = x;
      std::int64_t image = 0;
      std::int64_t radix = 1;
      for (auto d : f) {
        const std::int64_t digit = rest % d;
        rest /= d;
        image += (digit * (n % d)) % d * radix;
        radix *= d;
      }
      if (hit[static_cast<std::size_t>(image)]) injective = false;
      hit[static_cast<std::size_t>(image)] = 1;
    }
    if (injective != by_gcd) {
      throw std::logic_error("root uniqueness disagrees with gcd criterion for " + c.to_string());
    }
  }
  return by_gcd;
}

std::string MembershipVerdict::to_string() const {
  std::string out;
  switch (kind) {
    case Kind::Member: return "Member";
    case Kind::NonMember: out = "NonMember"; break;
    case Kind::Unknown: out = "Unknown"; break;
  }
  for (std::size_t i = 0; i < reasons.size(); ++i) {
    out += i ? ", " : ": ";
    out += reasons[i];
  }
  return out;
}

MembershipVerdict wreath_membership(const AbelianGroup& base, const AbelianGroup& top) {
  if (base.is_trivial() || top.is_trivial()) {
    throw Error(ErrorCode::InvalidArgument, "base and top must be nontrivial");
  }
  if (top.is_cyclic()) return {MembershipVerdict::Kind::Member, {}};

  // base wr top splits as a nontrivial direct product iff base has a
  // nontrivial abelian direct factor with unique n-th roots, n = |top|.
  // Primary components are the candidate factors.
  const std::int64_t n = top.order();
  for (const auto& [p, e] : factorize(base.order())) {
    const AbelianGroup component = base.primary_component(p);
    if (has_unique_nth_roots(component, n)) {
      return {MembershipVerdict::Kind::Unknown,
              {"base has direct factor " + component.to_string() + " with unique " +
               std::to_string(n) + "-th roots, so the wreath splits; membership of the factors is not decided"}};
    }
  }
  return {MembershipVerdict::Kind::NonMember,
          {std::string(MembershipVerdict::kNoUniqueRootsFactor),
           std::string(MembershipVerdict::kTopNotCyclic)}};
}

}  // namespace reebsym
