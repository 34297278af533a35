#pragma once

// Kronrod-Reeb graphs: data model, structural validation, function
// classification, canonical subtree codes, cyclic symmetry of slot words,
// the .reeb text format and DOT export.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace reebsym {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "7/2", "-3", "0.125" or "1.5e-2" exactly. Throws Parse on failure.
Rational parse_rational(std::string_view text);
/// "7/2" or "3".
std::string format_rational(const Rational& q);

enum class VertexKind { Min, Max, Saddle, Boundary };
enum class SurfaceKind { Disk, Cylinder };

std::string_view to_string(VertexKind kind);
std::string_view to_string(SurfaceKind kind);

struct ReebVertex {
  std::string id;
  VertexKind kind = VertexKind::Max;
  Rational level;
  int crit_points = 1;
};

struct ReebEdge {
  std::string id;
  std::size_t a = 0;
  std::size_t b = 0;
};

/// Undirected multigraph of critical level-set components and boundary
/// components. Vertices and edges are addressed by dense indices; the string
/// ids are labels for I/O.
class ReebGraph {
 public:
  std::size_t add_vertex(ReebVertex v);
  std::size_t add_edge(std::string id, std::size_t a, std::size_t b);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const ReebVertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const ReebEdge& edge(std::size_t e) const { return edges_.at(e); }
  std::span<const ReebVertex> vertices() const noexcept { return vertices_; }
  std::span<const ReebEdge> edges() const noexcept { return edges_; }
  /// Incident edge indices; a self-loop appears twice.
  std::span<const std::size_t> incident(std::size_t v) const { return incident_.at(v); }
  std::size_t degree(std::size_t v) const { return incident_.at(v).size(); }
  std::size_t other_end(std::size_t e, std::size_t v) const;
  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;

  std::size_t component_count() const;
  /// E - V + (number of components).
  std::size_t betti_number() const;
  /// For each edge, whether removing it disconnects its component.
  std::vector<bool> bridges() const;

 private:
  std::vector<ReebVertex> vertices_;
  std::vector<ReebEdge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Attachment data of a critical component: `axial` edges are fixed by
/// every rotation of the component, `cyclic` edges sit in slots that a
/// rotation shifts cyclically.
struct Atom {
  std::vector<std::size_t> axial;
  std::vector<std::size_t> cyclic;
};

struct EnhancedReebGraph {
  ReebGraph graph;
  SurfaceKind surface = SurfaceKind::Disk;
  std::size_t root = 0;
  std::map<std::size_t, Atom> atoms;  // keyed by saddle vertex index
};

struct Violation {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  bool has(std::string_view code) const;
  std::string to_string() const;
};

/// Structural checks shared by every Reeb graph: connectivity, monotone
/// edges, degrees and critical-point counts. With a planar surface, also the
/// saddle degree rule deg = crit_points + 2.
ValidationReport validate_graph(const ReebGraph& g, std::optional<SurfaceKind> surface = std::nullopt);

/// validate_graph plus root, boundary count, Betti bound and atom checks.
ValidationReport validate_reeb(const EnhancedReebGraph& g);

struct FunctionClass {
  int c0 = 0;  // minima
  int c1 = 0;  // saddle critical points
  int c2 = 0;  // maxima
  bool is_generic = false;
  bool is_simple = false;
};

FunctionClass classify_function(const ReebGraph& g);
inline FunctionClass classify_function(const EnhancedReebGraph& g) {
  return classify_function(g.graph);
}

inline int euler_characteristic(SurfaceKind s) { return s == SurfaceKind::Disk ? 1 : 0; }

/// c0 - c1 + c2 == chi.
bool morse_equality_check(int c0, int c1, int c2, int chi);
inline bool morse_equality_check(int c0, int c1, int c2, SurfaceKind s) {
  return morse_equality_check(c0, c1, c2, euler_characteristic(s));
}

struct CanonicalCode {
  std::string bytes;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Code of the subtree hanging below `vertex` when entered through
/// `parent_edge`. Equal codes iff the subtrees are isomorphic by a map that
/// preserves levels exactly and the cyclic order of slots. Throws CycleBelow
/// if the subtree is not a tree and InvalidGraph if a saddle lacks an atom.
CanonicalCode canonical_code(const EnhancedReebGraph& g, std::size_t parent_edge, std::size_t vertex);

struct CyclicSymmetry {
  int m = 1;                                 // order of the rotation group
  std::vector<std::vector<std::size_t>> orbits;  // p = d/m orbits of size m
};

/// Rotational symmetry of a cyclic word.
CyclicSymmetry cyclic_symmetry(std::span<const CanonicalCode> word);

/// DOT digraph with edges oriented by increasing level. Byte-deterministic.
std::string to_dot(const ReebGraph& g);

/// .reeb text format:
///   SURFACE disk|cylinder
///   VERTEX <id> min|max|saddle|boundary <level> <crit_points>
///   EDGE <eid> <vid> <vid>
///   ATOM <vid> AXIAL <eid>... CYCLIC <eid>...
///   ROOT <vid>
/// `#` starts a comment. Throws Parse with the offending line number.
EnhancedReebGraph parse_reeb(std::string_view text);
std::string write_reeb(const EnhancedReebGraph& g);

}  // namespace reebsym
