#pragma once

// Automorphism groups of finite trees as words over products and
// symmetric-top wreath products, with a brute-force counting oracle.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reebsym/group.hpp"
#include "reebsym/word.hpp"

namespace reebsym {

class Tree {
 public:
  /// Index of `id`, creating the vertex if needed.
  std::size_t add_vertex(const std::string& id);
  void add_edge(std::size_t a, std::size_t b);

  std::size_t vertex_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::string& id(std::size_t v) const { return ids_.at(v); }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }

  /// Throws InvalidGraph unless nonempty, connected and acyclic.
  void validate() const;

  /// Unlabeled tree on n vertices from an edge list over 0..n-1.
  static Tree from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Text format: `EDGE a b` lines, optional `VERTEX a` lines for isolated
/// ids, `#` comments. Throws Parse; the result is validated.
Tree parse_tree(std::string_view text);

/// One or two central vertices, found by repeatedly stripping leaves.
std::vector<std::size_t> tree_center(const Tree& t);

/// Canonical string of the unlabeled tree; equal iff isomorphic.
std::string tree_canonical_form(const Tree& t);

/// Full automorphism group, normalized.
SymExpr aut_tree(const Tree& t);

constexpr std::size_t kBruteForceTreeLimit = 10;

/// Number of adjacency-preserving vertex bijections. Throws SizeCap above
/// kBruteForceTreeLimit vertices.
std::uint64_t brute_force_aut_count(const Tree& t);

/// All automorphisms as permutations (image of vertex i at position i).
std::vector<std::vector<int>> brute_force_automorphisms(const Tree& t);

/// The automorphism group as a permutation group on the vertices.
ConcreteGroup brute_force_aut_group(const Tree& t);

/// Every unlabeled tree with 1..max_vertices vertices, once each.
std::vector<Tree> enumerate_trees(std::size_t max_vertices);

}  // namespace reebsym
