#include "reebsym/reeb.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "reebsym/error.hpp"

namespace reebsym {

std::string_view to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::Min: return "min";
    case VertexKind::Max: return "max";
    case VertexKind::Saddle: return "saddle";
    case VertexKind::Boundary: return "boundary";
  }
  return "?";
}

std::string_view to_string(SurfaceKind kind) {
  return kind == SurfaceKind::Disk ? "disk" : "cylinder";
}

// ---------------------------------------------------------------------------
// ReebGraph

std::size_t ReebGraph::add_vertex(ReebVertex v) {
  vertices_.push_back(std::move(v));
  incident_.emplace_back();
  return vertices_.size() - 1;
}

std::size_t ReebGraph::add_edge(std::string id, std::size_t a, std::size_t b) {
  if (a >= vertices_.size() || b >= vertices_.size()) {
    throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
  }
  edges_.push_back({std::move(id), a, b});
  const std::size_t e = edges_.size() - 1;
  incident_[a].push_back(e);
  incident_[b].push_back(e);
  return e;
}

std::size_t ReebGraph::other_end(std::size_t e, std::size_t v) const {
  const ReebEdge& edge = edges_.at(e);
  return edge.a == v ? edge.b : edge.a;
}

std::optional<std::size_t> ReebGraph::find_vertex(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> ReebGraph::find_edge(std::string_view id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t ReebGraph::component_count() const {
  std::vector<char> seen(vertices_.size(), 0);
  std::size_t count = 0;
  for (std::size_t s = 0; s < vertices_.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t e : incident_[v]) {
        const std::size_t w = other_end(e, v);
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

std::size_t ReebGraph::betti_number() const {
  return edges_.size() + component_count() - vertices_.size();
}

std::vector<bool> ReebGraph::bridges() const {
  // Iterative lowlink DFS; parallel edges are told apart by edge index.
  const std::size_t n = vertices_.size();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnseen);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> is_bridge(edges_.size(), false);
  std::size_t timer = 0;
  struct Frame {
    std::size_t v;
    std::size_t via;  // edge used to enter v
    std::size_t next;
  };
  for (std::size_t s = 0; s < n; ++s) {
    if (disc[s] != kUnseen) continue;
    std::vector<Frame> stack{{s, kUnseen, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < incident_[f.v].size()) {
        const std::size_t e = incident_[f.v][f.next++];
        if (e == f.via) continue;
        const std::size_t w = other_end(e, f.v);
        if (disc[w] == kUnseen) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] > disc[parent.v]) is_bridge[done.via] = true;
        }
      }
    }
  }
  return is_bridge;
}

// ---------------------------------------------------------------------------
// Validation

bool ValidationReport::has(std::string_view code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& v : violations) out += v.code + ": " + v.detail + "\n";
  return out;
}

ValidationReport validate_graph(const ReebGraph& g, std::optional<SurfaceKind> surface) {
  ValidationReport report;
  auto add = [&](std::string code, std::string detail) {
    report.violations.push_back({std::move(code), std::move(detail)});
  };
  if (g.vertex_count() == 0) {
    add("empty", "graph has no vertices");
    return report;
  }
  if (g.component_count() != 1) add("disconnected", "graph is not connected");

  for (const auto& e : g.edges()) {
    if (g.vertex(e.a).level == g.vertex(e.b).level) {
      add("non-monotone edge", "edge " + e.id + " joins equal levels " +
                                   format_rational(g.vertex(e.a).level));
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const ReebVertex& rv = g.vertex(v);
    const std::size_t deg = g.degree(v);
    switch (rv.kind) {
      case VertexKind::Min:
      case VertexKind::Max:
        if (deg != 1) add("degree", rv.id + " is an extremum of degree " + std::to_string(deg));
        if (rv.crit_points != 1) add("crit-points", rv.id + " is an extremum with crit_points != 1");
        break;
      case VertexKind::Boundary:
        if (deg != 1) add("degree", rv.id + " is a boundary of degree " + std::to_string(deg));
        if (rv.crit_points != 0) add("crit-points", rv.id + " is a boundary with crit_points != 0");
        break;
      case VertexKind::Saddle:
        if (deg < 3) add("degree", rv.id + " is a saddle of degree " + std::to_string(deg));
        if (rv.crit_points < 1) add("crit-points", rv.id + " is a saddle with crit_points < 1");
        if (surface && deg != static_cast<std::size_t>(rv.crit_points) + 2) {
          add("degree rule", rv.id + " has degree " + std::to_string(deg) + " but crit_points " +
                                 std::to_string(rv.crit_points));
        }
        break;
    }
  }
  return report;
}

ValidationReport validate_reeb(const EnhancedReebGraph& eg) {
  const ReebGraph& g = eg.graph;
  ValidationReport report = validate_graph(g, eg.surface);
  auto add = [&](std::string code, std::string detail) {
    report.violations.push_back({std::move(code), std::move(detail)});
  };
  if (g.vertex_count() == 0) return report;

  std::size_t boundaries = 0;
  for (const auto& v : g.vertices()) boundaries += v.kind == VertexKind::Boundary ? 1 : 0;
  const std::size_t expected_boundaries = eg.surface == SurfaceKind::Disk ? 1 : 2;
  if (boundaries != expected_boundaries) {
    add("boundary count", std::string(to_string(eg.surface)) + " needs " +
                              std::to_string(expected_boundaries) + " boundary vertices, found " +
                              std::to_string(boundaries));
  }

  const bool root_ok = eg.root < g.vertex_count() &&
                       g.vertex(eg.root).kind == VertexKind::Boundary && g.degree(eg.root) == 1;
  if (!root_ok) add("root", "root must be a boundary vertex of degree 1");

  const std::size_t betti = g.betti_number();
  const std::size_t max_betti = eg.surface == SurfaceKind::Disk ? 0 : 1;
  if (betti > max_betti) {
    add("Betti bound", "first Betti number " + std::to_string(betti) + " exceeds " +
                           std::to_string(max_betti) + " for " + std::string(to_string(eg.surface)));
  }

  for (const auto& [v, atom] : eg.atoms) {
    if (v >= g.vertex_count() || g.vertex(v).kind != VertexKind::Saddle) {
      add("atom on non-saddle", "atom attached to a vertex that is not a saddle");
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.vertex(v).kind != VertexKind::Saddle) continue;
    auto it = eg.atoms.find(v);
    if (it == eg.atoms.end()) {
      add("atom missing", "saddle " + g.vertex(v).id + " has no atom");
      continue;
    }
    std::multiset<std::size_t> slots(it->second.axial.begin(), it->second.axial.end());
    slots.insert(it->second.cyclic.begin(), it->second.cyclic.end());
    const std::multiset<std::size_t> incident(g.incident(v).begin(), g.incident(v).end());
    if (slots != incident) {
      add("atom incomplete", "atom slots of " + g.vertex(v).id + " do not match its incident edges");
    }
  }

  // The edge toward the root must be axial wherever that edge is unique.
  if (root_ok && report.violations.empty()) {
    const auto is_bridge = g.bridges();
    std::vector<std::size_t> parent_edge(g.vertex_count(), static_cast<std::size_t>(-1));
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<std::size_t> queue{eg.root};
    seen[eg.root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t v = queue[head];
      for (std::size_t e : g.incident(v)) {
        const std::size_t w = g.other_end(e, v);
        if (!seen[w]) {
          seen[w] = 1;
          parent_edge[w] = e;
          queue.push_back(w);
        }
      }
    }
    for (const auto& [v, atom] : eg.atoms) {
      const std::size_t pe = parent_edge[v];
      if (pe == static_cast<std::size_t>(-1) || !is_bridge[pe]) continue;
      if (std::find(atom.axial.begin(), atom.axial.end(), pe) == atom.axial.end()) {
        add("root edge not axial", "edge " + g.edge(pe).id + " toward the root is not axial at " +
                                       g.vertex(v).id);
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Classification

FunctionClass classify_function(const ReebGraph& g) {
  FunctionClass fc;
  std::vector<Rational> levels;
  fc.is_simple = true;
  for (const auto& v : g.vertices()) {
    switch (v.kind) {
      case VertexKind::Min:
        ++fc.c0;
        levels.push_back(v.level);
        break;
      case VertexKind::Max:
        ++fc.c2;
        levels.push_back(v.level);
        break;
      case VertexKind::Saddle:
        fc.c1 += v.crit_points;
        if (v.crit_points != 1) fc.is_simple = false;
        levels.push_back(v.level);
        break;
      case VertexKind::Boundary:
        break;
    }
  }
  std::sort(levels.begin(), levels.end());
  const bool distinct = std::adjacent_find(levels.begin(), levels.end()) == levels.end();
  fc.is_generic = fc.is_simple && distinct;
  return fc;
}

bool morse_equality_check(int c0, int c1, int c2, int chi) { return c0 - c1 + c2 == chi; }

// ---------------------------------------------------------------------------
// DOT

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const ReebGraph& g) {
  std::ostringstream out;
  out << "digraph reeb {\n";
  for (const auto& v : g.vertices()) {
    out << "  " << dot_quote(v.id) << " [label="
        << dot_quote(std::string(to_string(v.kind)) + "@" + format_rational(v.level) + "(" +
                     std::to_string(v.crit_points) + ")")
        << "];\n";
  }
  for (const auto& e : g.edges()) {
    std::size_t lo = e.a;
    std::size_t hi = e.b;
    if (g.vertex(hi).level < g.vertex(lo).level) std::swap(lo, hi);
    out << "  " << dot_quote(g.vertex(lo).id) << " -> " << dot_quote(g.vertex(hi).id)
        << " [label=" << dot_quote(e.id) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace reebsym
