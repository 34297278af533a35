#pragma once

// Symmetry groups of functions from their enhanced Reeb graphs, and the
// reverse construction of a graph realizing a given word.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "reebsym/reeb.hpp"
#include "reebsym/word.hpp"

namespace reebsym {

/// Group of the function described by `g`, as a normalized word.
/// Throws InvalidGraph if `g` fails validate_reeb and UnsupportedAtom if a
/// saddle stores more than two axial slots.
GroupExpr compute_group(const EnhancedReebGraph& g);

/// Product of the groups of independent pieces. Errors carry the index of
/// the failing piece in their message.
GroupExpr combine_decomposition(const std::vector<EnhancedReebGraph>& pieces);

/// A valid disk graph whose group is normalize(expr).
EnhancedReebGraph realize_reeb(const GroupExpr& expr);

struct RoundTripResult {
  bool ok = false;
  GroupExpr expected;
  GroupExpr got;
  std::string detail;  // empty on success
};

RoundTripResult round_trip(const GroupExpr& expr);
inline bool round_trip_check(const GroupExpr& expr) { return round_trip(expr).ok; }

/// Number of Reeb graph vertices realize_reeb produces for `expr`.
std::uint64_t realized_vertex_count(const GroupExpr& expr);

/// Random normalized word with 1..max_nodes Prod/Wr nodes, wreath exponents
/// in [2, max_exponent], and a realization of at most `max_vertices` vertices.
GroupExpr random_expr(std::mt19937_64& rng, int max_nodes, int max_exponent = 4,
                      std::uint64_t max_vertices = 20000);

}  // namespace reebsym
