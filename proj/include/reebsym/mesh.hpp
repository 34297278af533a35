#pragma once

// Triangulated surfaces with exact per-vertex values: loading, PL critical
// point classification, Reeb graph extraction by a level sweep, and the
// end-to-end group pipeline.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reebsym/reeb.hpp"
#include "reebsym/word.hpp"

namespace reebsym {

struct Mesh {
  std::vector<std::array<double, 3>> positions;
  /// Consistently oriented triangles.
  std::vector<std::array<std::size_t, 3>> triangles;
  /// Sorted vertex pairs, each with its 1 or 2 triangles.
  std::vector<std::array<std::size_t, 2>> edges;
  std::vector<std::vector<std::size_t>> edge_triangles;
  /// Ordered vertex cycles along the boundary.
  std::vector<std::vector<std::size_t>> boundary_cycles;

  std::size_t vertex_count() const noexcept { return positions.size(); }
  int euler_characteristic() const;
  std::size_t boundary_count() const noexcept { return boundary_cycles.size(); }
  /// Orientable genus from chi = 2 - 2g - b.
  int genus() const;
  /// Rank of first homology: 2g + max(0, b - 1).
  int first_betti_bound() const;
};

/// ASCII OFF. Polygon faces are fan-triangulated. Throws Parse,
/// NonManifoldEdge, NonManifoldVertex, NonOrientable or Disconnected.
Mesh load_mesh(std::string_view off_text);

/// One rational per vertex, one per line; blank lines and `#` comments are
/// skipped. Throws Parse or CountMismatch.
std::vector<Rational> load_values(std::string_view vals_text, const Mesh& mesh);

enum class PointKind { Regular, Min, Max, Saddle, Boundary };
std::string_view to_string(PointKind kind);

struct CriticalReport {
  std::vector<PointKind> kinds;
  std::vector<int> multiplicity;  // s for saddles, 1 for extrema, 0 otherwise
  int c0 = 0;
  int c1 = 0;
  int c2 = 0;
};

/// Classifies interior vertices by lower-link components under the
/// (value, index) order. Boundary vertices are reported as Boundary.
CriticalReport classify_vertices(const Mesh& mesh, const std::vector<Rational>& values);

/// Reeb graph by sweeping vertices in (value, index) order. Each boundary
/// cycle becomes one Boundary vertex; arcs between equal levels are
/// contracted and their critical counts summed. Throws NonConstantBoundary.
ReebGraph extract_reeb(const Mesh& mesh, const std::vector<Rational>& values);

struct PipelineResult {
  CriticalReport report;
  ReebGraph reeb;
  int chi = 0;
  int boundary_count = 0;
  bool morse_equality = false;
  std::size_t reeb_betti = 0;
  int betti_bound = 0;
  bool betti_ok = false;
  FunctionClass function_class;
  std::optional<SurfaceKind> surface;
  std::optional<EnhancedReebGraph> enhanced;
  std::optional<GroupExpr> group;
  std::string skipped;  // reason when no group was computed
};

inline constexpr std::string_view kSkipNonSimple = "non-simple function: supply .reeb with atom data";
inline constexpr std::string_view kSkipSurface = "unsupported surface";

/// Classification, extraction and checks; with `with_group`, also the
/// enhanced graph and its group when the surface and function qualify.
PipelineResult mesh_pipeline(const Mesh& mesh, const std::vector<Rational>& values,
                             bool with_group = true);

/// Human-readable report, byte-deterministic.
std::string format_pipeline(const PipelineResult& r, bool with_group);

}  // namespace reebsym
