#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>
#include <unordered_map>

#include "reebsym/error.hpp"
#include "reebsym/group.hpp"

namespace reebsym {

namespace {

// Groups up to this order get a full multiplication table.
constexpr std::size_t kTableLimit = 3000;

using Index = std::uint32_t;
constexpr Index kNone = static_cast<Index>(-1);

// Isomorphism-invariant fingerprint of a single element.
using ElementKey = std::tuple<long long, std::size_t, std::size_t>;  // order, class size, #square roots

class IndexedGroup {
 public:
  IndexedGroup(const ConcreteGroup& g, std::size_t cap) : group_(g), elems_(g.elements(cap)) {
    index_.reserve(elems_.size());
    for (Index i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
    if (elems_.size() <= kTableLimit) {
      const std::size_t n = elems_.size();
      table_.resize(n * n);
      for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) table_[a * n + b] = lookup(group_.multiply(elems_[a], elems_[b]));
      }
    }
    for (const auto& gen : g.generators()) gens_.push_back(lookup(gen));
    compute_keys();
  }

  std::size_t size() const { return elems_.size(); }
  bool has_table() const { return !table_.empty(); }
  Index identity() const { return 0; }  // closure starts from the identity
  const std::vector<Index>& structural_generators() const { return gens_; }
  const ElementKey& key(Index x) const { return keys_[x]; }

  Index mul(Index a, Index b) const {
    if (!table_.empty()) return table_[a * elems_.size() + b];
    return lookup(group_.multiply(elems_[a], elems_[b]));
  }

  /// Elements of the subgroup generated by `gens`, identity first.
  std::vector<Index> closure(const std::vector<Index>& gens) const {
    std::vector<Index> out{identity()};
    std::vector<char> seen(size(), 0);
    seen[identity()] = 1;
    for (std::size_t head = 0; head < out.size(); ++head) {
      for (Index g : gens) {
        const Index y = mul(out[head], g);
        if (!seen[y]) {
          seen[y] = 1;
          out.push_back(y);
        }
      }
    }
    return out;
  }

 private:
  Index lookup(const GroupElement& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) {
      throw Error(ErrorCode::InvalidArgument, "product escaped the enumerated group");
    }
    return it->second;
  }

  void compute_keys() {
    const std::size_t n = size();
    std::vector<long long> order(n, 1);
    std::vector<std::size_t> roots(n, 0);
    for (Index x = 0; x < n; ++x) {
      Index p = x;
      while (p != identity()) {
        p = mul(p, x);
        ++order[x];
      }
      ++roots[mul(x, x)];
    }
    std::vector<Index> inverse(n, kNone);
    for (Index x = 0; x < n; ++x) inverse[x] = lookup(group_.invert(elems_[x]));

    // Conjugacy classes as orbits of conjugation by the generators.
    std::vector<std::size_t> class_size(n, 0);
    std::vector<char> seen(n, 0);
    for (Index x = 0; x < n; ++x) {
      if (seen[x]) continue;
      std::vector<Index> orbit{x};
      seen[x] = 1;
      for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (Index g : gens_) {
          const Index y = mul(mul(inverse[g], orbit[head]), g);
          if (!seen[y]) {
            seen[y] = 1;
            orbit.push_back(y);
          }
        }
      }
      for (Index y : orbit) class_size[y] = orbit.size();
    }
    keys_.resize(n);
    for (Index x = 0; x < n; ++x) keys_[x] = {order[x], class_size[x], roots[x]};
  }

  const ConcreteGroup& group_;
  const std::vector<GroupElement>& elems_;
  std::unordered_map<GroupElement, Index, GroupElementHash> index_;
  std::vector<Index> table_;
  std::vector<Index> gens_;
  std::vector<ElementKey> keys_;
};

class IsoSearch {
 public:
  IsoSearch(const IndexedGroup& g, const IndexedGroup& h) : g_(g), h_(h) {
    for (Index y = 0; y < h_.size(); ++y) by_key_[h_.key(y)].push_back(y);
  }

  bool run() {
    choose_generators();
    for (Index gen : gens_) {
      auto it = by_key_.find(g_.key(gen));
      if (it == by_key_.end()) return false;
      candidates_.push_back(&it->second);
    }
    images_.assign(gens_.size(), kNone);
    return assign(0);
  }

 private:
  std::size_t candidate_count(Index x) const {
    auto it = by_key_.find(g_.key(x));
    return it == by_key_.end() ? 0 : it->second.size();
  }

  // Greedy small generating set: repeatedly add the element that enlarges
  // the generated subgroup most, preferring elements with few candidate
  // images. Without a table this is too costly, so the structural
  // generators are used instead.
  void choose_generators() {
    if (!g_.has_table()) {
      gens_ = g_.structural_generators();
      return;
    }
    std::vector<Index> by_order(g_.size());
    for (Index x = 0; x < g_.size(); ++x) by_order[x] = x;
    std::stable_sort(by_order.begin(), by_order.end(), [&](Index a, Index b) {
      return std::get<0>(g_.key(a)) > std::get<0>(g_.key(b));
    });
    std::vector<char> in_sub(g_.size(), 0);
    in_sub[g_.identity()] = 1;
    std::size_t sub_size = 1;
    while (sub_size < g_.size()) {
      Index best = kNone;
      std::size_t best_size = 0;
      std::size_t best_cands = 0;
      std::vector<char> covered(g_.size(), 0);
      for (Index x : by_order) {
        if (in_sub[x] || covered[x]) continue;
        auto trial = gens_;
        trial.push_back(x);
        const auto sub = g_.closure(trial);
        const std::size_t cands = candidate_count(x);
        if (sub.size() > best_size || (sub.size() == best_size && cands < best_cands)) {
          best = x;
          best_size = sub.size();
          best_cands = cands;
          std::fill(covered.begin(), covered.end(), 0);
          for (Index y : sub) covered[y] = 1;
        }
      }
      gens_.push_back(best);
      std::fill(in_sub.begin(), in_sub.end(), 0);
      for (Index y : g_.closure(gens_)) in_sub[y] = 1;
      sub_size = best_size;
    }
  }

  bool assign(std::size_t i) {
    if (i == gens_.size()) return true;
    for (Index c : *candidates_[i]) {
      images_[i] = c;
      if (extends(i + 1) && assign(i + 1)) return true;
    }
    images_[i] = kNone;
    return false;
  }

  // Checks that gens_[0..k) -> images_[0..k) extends to an injective
  // homomorphism on the generated subgroup, by walking its Cayley graph.
  bool extends(std::size_t k) {
    phi_.assign(g_.size(), kNone);
    used_.assign(h_.size(), 0);
    std::vector<Index> queue{g_.identity()};
    phi_[g_.identity()] = h_.identity();
    used_[h_.identity()] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Index x = queue[head];
      for (std::size_t j = 0; j < k; ++j) {
        const Index y = g_.mul(x, gens_[j]);
        const Index image = h_.mul(phi_[x], images_[j]);
        if (phi_[y] == kNone) {
          if (used_[image]) return false;
          phi_[y] = image;
          used_[image] = 1;
          queue.push_back(y);
        } else if (phi_[y] != image) {
          return false;
        }
      }
    }
    return true;
  }

  const IndexedGroup& g_;
  const IndexedGroup& h_;
  std::map<ElementKey, std::vector<Index>> by_key_;
  std::vector<Index> gens_;
  std::vector<const std::vector<Index>*> candidates_;
  std::vector<Index> images_;
  std::vector<Index> phi_;
  std::vector<char> used_;
};

}  // namespace

bool are_isomorphic(const ConcreteGroup& g, const ConcreteGroup& h, std::size_t cap) {
  if (g.order(cap) != h.order(cap)) return false;
  const IndexedGroup ig(g, cap);
  const IndexedGroup ih(h, cap);

  std::vector<ElementKey> kg;
  std::vector<ElementKey> kh;
  for (Index x = 0; x < ig.size(); ++x) kg.push_back(ig.key(x));
  for (Index y = 0; y < ih.size(); ++y) kh.push_back(ih.key(y));
  std::sort(kg.begin(), kg.end());
  std::sort(kh.begin(), kh.end());
  if (kg != kh) return false;

  return IsoSearch(ig, ih).run();
}

}  // namespace reebsym
