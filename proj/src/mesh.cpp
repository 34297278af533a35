#include "reebsym/mesh.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "reebsym/error.hpp"
#include "reebsym/symmetry.hpp"

namespace reebsym {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ls(line);
  std::vector<std::string> out;
  for (std::string t; ls >> t;) out.push_back(t);
  return out;
}

// Non-empty lines with comments removed, paired with their 1-based numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tok = tokens(raw);
    if (!tok.empty()) out.emplace_back(n, std::move(tok));
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

long long parse_count(std::size_t line, const std::string& tok) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size() || v < 0) parse_fail(line, "bad count '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    parse_fail(line, "bad count '" + tok + "'");
  }
}

double parse_coord(std::size_t line, const std::string& tok) {
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) parse_fail(line, "bad coordinate '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    parse_fail(line, "bad coordinate '" + tok + "'");
  }
}

void build_topology(Mesh& m) {
  const std::size_t nv = m.vertex_count();
  std::map<std::array<std::size_t, 2>, std::vector<std::size_t>> by_edge;
  for (std::size_t t = 0; t < m.triangles.size(); ++t) {
    const auto& tri = m.triangles[t];
    for (int i = 0; i < 3; ++i) {
      std::array<std::size_t, 2> e{tri[i], tri[(i + 1) % 3]};
      if (e[0] > e[1]) std::swap(e[0], e[1]);
      by_edge[e].push_back(t);
    }
  }
  for (auto& [e, tris] : by_edge) {
    if (tris.size() > 2) {
      throw Error(ErrorCode::NonManifoldEdge, "edge " + std::to_string(e[0]) + "-" +
                                                  std::to_string(e[1]) + " lies in " +
                                                  std::to_string(tris.size()) + " triangles");
    }
    m.edges.push_back(e);
    m.edge_triangles.push_back(tris);
  }

  // Every vertex is used, and its link is one cycle or one path.
  std::vector<std::vector<std::size_t>> vertex_tris(nv);
  for (std::size_t t = 0; t < m.triangles.size(); ++t) {
    for (std::size_t v : m.triangles[t]) vertex_tris[v].push_back(t);
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (vertex_tris[v].empty()) {
      throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(v) + " is in no triangle");
    }
    std::map<std::size_t, std::vector<std::size_t>> link;
    for (std::size_t t : vertex_tris[v]) {
      std::vector<std::size_t> others;
      for (std::size_t w : m.triangles[t]) {
        if (w != v) others.push_back(w);
      }
      link[others[0]].push_back(others[1]);
      link[others[1]].push_back(others[0]);
    }
    std::size_t ends = 0;
    for (const auto& [w, nbrs] : link) ends += nbrs.size() == 1 ? 1 : 0;
    std::set<std::size_t> seen{link.begin()->first};
    std::vector<std::size_t> stack{link.begin()->first};
    while (!stack.empty()) {
      const std::size_t w = stack.back();
      stack.pop_back();
      for (std::size_t x : link[w]) {
        if (seen.insert(x).second) stack.push_back(x);
      }
    }
    if (seen.size() != link.size() || (ends != 0 && ends != 2)) {
      throw Error(ErrorCode::NonManifoldVertex, "link of vertex " + std::to_string(v) +
                                                    " is not a single cycle or path");
    }
  }

  // Consistent orientation by flipping triangles across shared edges.
  std::vector<int> flip(m.triangles.size(), -1);
  auto runs_forward = [&](std::size_t t, std::size_t a, std::size_t b) {
    const auto& tri = m.triangles[t];
    for (int i = 0; i < 3; ++i) {
      if (tri[i] == a && tri[(i + 1) % 3] == b) return true;
    }
    return false;
  };
  std::size_t components = 0;
  for (std::size_t s = 0; s < m.triangles.size(); ++s) {
    if (flip[s] >= 0) continue;
    ++components;
    flip[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t t = queue[head];
      const auto& tri = m.triangles[t];
      for (int i = 0; i < 3; ++i) {
        std::array<std::size_t, 2> key{tri[i], tri[(i + 1) % 3]};
        if (key[0] > key[1]) std::swap(key[0], key[1]);
        for (std::size_t u : by_edge[key]) {
          if (u == t) continue;
          // Same traversal direction means opposite orientations.
          const bool same_dir = runs_forward(u, tri[i], tri[(i + 1) % 3]);
          const int want = flip[t] ^ (same_dir ? 1 : 0);
          if (flip[u] < 0) {
            flip[u] = want;
            queue.push_back(u);
          } else if (flip[u] != want) {
            throw Error(ErrorCode::NonOrientable, "surface is not orientable");
          }
        }
      }
    }
  }
  if (components > 1) throw Error(ErrorCode::Disconnected, "surface has " + std::to_string(components) + " components");
  for (std::size_t t = 0; t < m.triangles.size(); ++t) {
    if (flip[t] == 1) std::swap(m.triangles[t][1], m.triangles[t][2]);
  }

  // Boundary cycles, traced from their smallest vertex.
  std::map<std::size_t, std::vector<std::size_t>> bnbr;
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    if (m.edge_triangles[e].size() != 1) continue;
    bnbr[m.edges[e][0]].push_back(m.edges[e][1]);
    bnbr[m.edges[e][1]].push_back(m.edges[e][0]);
  }
  std::set<std::size_t> used;
  for (const auto& [start, nbrs] : bnbr) {
    if (used.count(start)) continue;
    std::vector<std::size_t> cycle{start};
    used.insert(start);
    std::size_t prev = start;
    std::size_t cur = std::min(nbrs[0], nbrs[1]);
    while (cur != start) {
      cycle.push_back(cur);
      used.insert(cur);
      const auto& nb = bnbr[cur];
      const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    m.boundary_cycles.push_back(std::move(cycle));
  }
}

}  // namespace

int Mesh::euler_characteristic() const {
  return static_cast<int>(vertex_count()) - static_cast<int>(edges.size()) +
         static_cast<int>(triangles.size());
}

int Mesh::genus() const {
  return (2 - euler_characteristic() - static_cast<int>(boundary_count())) / 2;
}

int Mesh::first_betti_bound() const {
  return 2 * genus() + std::max(0, static_cast<int>(boundary_count()) - 1);
}

Mesh load_mesh(std::string_view off_text) {
  const auto lines = content_lines(off_text);
  if (lines.empty() || lines[0].second[0] != "OFF") {
    parse_fail(lines.empty() ? 1 : lines[0].first, "missing OFF header");
  }
  std::size_t li = 0;
  std::vector<std::string> counts(lines[0].second.begin() + 1, lines[0].second.end());
  std::size_t counts_line = lines[0].first;
  if (counts.empty()) {
    if (lines.size() < 2) parse_fail(lines[0].first, "missing vertex/face counts");
    counts = lines[1].second;
    counts_line = lines[1].first;
    li = 2;
  } else {
    li = 1;
  }
  if (counts.size() < 2) parse_fail(counts_line, "expected vertex and face counts");
  const auto nv = static_cast<std::size_t>(parse_count(counts_line, counts[0]));
  const auto nf = static_cast<std::size_t>(parse_count(counts_line, counts[1]));
  if (lines.size() < li + nv + nf) {
    throw Error(ErrorCode::CountMismatch, "OFF declares " + std::to_string(nv) + " vertices and " +
                                              std::to_string(nf) + " faces but the file is shorter");
  }

  Mesh m;
  for (std::size_t i = 0; i < nv; ++i, ++li) {
    const auto& [ln, tok] = lines[li];
    if (tok.size() < 3) parse_fail(ln, "vertex needs three coordinates");
    m.positions.push_back({parse_coord(ln, tok[0]), parse_coord(ln, tok[1]), parse_coord(ln, tok[2])});
  }
  for (std::size_t i = 0; i < nf; ++i, ++li) {
    const auto& [ln, tok] = lines[li];
    const auto k = static_cast<std::size_t>(parse_count(ln, tok[0]));
    if (k < 3 || tok.size() < k + 1) parse_fail(ln, "face needs at least three vertex indices");
    std::vector<std::size_t> poly;
    for (std::size_t j = 1; j <= k; ++j) {
      const auto idx = static_cast<std::size_t>(parse_count(ln, tok[j]));
      if (idx >= nv) parse_fail(ln, "vertex index " + tok[j] + " out of range");
      poly.push_back(idx);
    }
    if (std::set<std::size_t>(poly.begin(), poly.end()).size() != poly.size()) {
      parse_fail(ln, "face repeats a vertex");
    }
    for (std::size_t j = 1; j + 1 < k; ++j) m.triangles.push_back({poly[0], poly[j], poly[j + 1]});
  }
  if (li != lines.size()) parse_fail(lines[li].first, "unexpected trailing data");
  build_topology(m);
  return m;
}

std::vector<Rational> load_values(std::string_view vals_text, const Mesh& mesh) {
  std::vector<Rational> out;
  for (const auto& [ln, tok] : content_lines(vals_text)) {
    if (tok.size() != 1) parse_fail(ln, "expected one value per line");
    try {
      out.push_back(parse_rational(tok[0]));
    } catch (const Error& e) {
      parse_fail(ln, e.what());
    }
  }
  if (out.size() != mesh.vertex_count()) {
    throw Error(ErrorCode::CountMismatch, "mesh has " + std::to_string(mesh.vertex_count()) +
                                              " vertices but " + std::to_string(out.size()) +
                                              " values were given");
  }
  return out;
}

std::string_view to_string(PointKind kind) {
  switch (kind) {
    case PointKind::Regular: return "regular";
    case PointKind::Min: return "min";
    case PointKind::Max: return "max";
    case PointKind::Saddle: return "saddle";
    case PointKind::Boundary: return "boundary";
  }
  return "?";
}

namespace {

// Sweep order. Each boundary cycle is one unit; interior vertices are units
// of their own. Units are ordered by (value, smallest vertex index).
struct SweepOrder {
  std::vector<std::vector<std::size_t>> units;
  std::vector<std::size_t> rank;  // unit position per vertex
  std::vector<int> cycle_of;      // boundary cycle per vertex, or -1

  SweepOrder(const Mesh& m, const std::vector<Rational>& values) {
    if (values.size() != m.vertex_count()) {
      throw Error(ErrorCode::CountMismatch, "value count does not match the mesh");
    }
    cycle_of.assign(m.vertex_count(), -1);
    for (std::size_t c = 0; c < m.boundary_cycles.size(); ++c) {
      const auto& cyc = m.boundary_cycles[c];
      for (std::size_t v : cyc) {
        cycle_of[v] = static_cast<int>(c);
        if (values[v] != values[cyc.front()]) {
          throw Error(ErrorCode::NonConstantBoundary,
                      "boundary component " + std::to_string(c) + " is not a level set");
        }
      }
    }
    std::vector<std::pair<std::pair<Rational, std::size_t>, std::vector<std::size_t>>> keyed;
    for (const auto& cyc : m.boundary_cycles) {
      keyed.push_back({{values[cyc.front()], *std::min_element(cyc.begin(), cyc.end())}, cyc});
    }
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
      if (cycle_of[v] < 0) keyed.push_back({{values[v], v}, {v}});
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rank.assign(m.vertex_count(), 0);
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      for (std::size_t v : keyed[i].second) rank[v] = i;
      units.push_back(std::move(keyed[i].second));
    }
  }
};

// Link of an interior vertex as an ordered cycle of neighbors.
std::vector<std::size_t> link_cycle(const Mesh& m, const std::vector<std::vector<std::size_t>>& vtris,
                                    std::size_t v) {
  std::map<std::size_t, std::size_t> next;
  for (std::size_t t : vtris[v]) {
    const auto& tri = m.triangles[t];
    for (int i = 0; i < 3; ++i) {
      if (tri[i] == v) next[tri[(i + 1) % 3]] = tri[(i + 2) % 3];
    }
  }
  std::vector<std::size_t> cycle;
  const std::size_t start = next.begin()->first;
  std::size_t cur = start;
  do {
    cycle.push_back(cur);
    cur = next.at(cur);
  } while (cur != start);
  return cycle;
}

std::vector<std::vector<std::size_t>> vertex_triangles(const Mesh& m) {
  std::vector<std::vector<std::size_t>> out(m.vertex_count());
  for (std::size_t t = 0; t < m.triangles.size(); ++t) {
    for (std::size_t v : m.triangles[t]) out[v].push_back(t);
  }
  return out;
}

CriticalReport classify_with(const Mesh& m, const SweepOrder& order) {
  CriticalReport r;
  const std::size_t n = m.vertex_count();
  r.kinds.assign(n, PointKind::Regular);
  r.multiplicity.assign(n, 0);
  const auto vtris = vertex_triangles(m);
  for (std::size_t v = 0; v < n; ++v) {
    if (order.cycle_of[v] >= 0) {
      r.kinds[v] = PointKind::Boundary;
      continue;
    }
    const auto link = link_cycle(m, vtris, v);
    std::size_t lower = 0;
    std::size_t runs = 0;
    for (std::size_t i = 0; i < link.size(); ++i) {
      const bool lo = order.rank[link[i]] < order.rank[v];
      const bool prev_lo = order.rank[link[(i + link.size() - 1) % link.size()]] < order.rank[v];
      lower += lo ? 1 : 0;
      runs += lo && !prev_lo ? 1 : 0;
    }
    if (lower == 0) {
      r.kinds[v] = PointKind::Min;
      r.multiplicity[v] = 1;
      ++r.c0;
    } else if (lower == link.size()) {
      r.kinds[v] = PointKind::Max;
      r.multiplicity[v] = 1;
      ++r.c2;
    } else if (runs >= 2) {
      r.kinds[v] = PointKind::Saddle;
      r.multiplicity[v] = static_cast<int>(runs) - 1;
      r.c1 += r.multiplicity[v];
    }
  }
  return r;
}

}  // namespace

CriticalReport classify_vertices(const Mesh& mesh, const std::vector<Rational>& values) {
  return classify_with(mesh, SweepOrder(mesh, values));
}

ReebGraph extract_reeb(const Mesh& mesh, const std::vector<Rational>& values) {
  const SweepOrder order(mesh, values);
  const CriticalReport report = classify_with(mesh, order);
  const std::size_t nv = mesh.vertex_count();
  const std::size_t ne = mesh.edges.size();

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> nbr(nv);  // (neighbor, edge)
  std::map<std::array<std::size_t, 2>, std::size_t> edge_index;
  for (std::size_t e = 0; e < ne; ++e) {
    nbr[mesh.edges[e][0]].emplace_back(mesh.edges[e][1], e);
    nbr[mesh.edges[e][1]].emplace_back(mesh.edges[e][0], e);
    edge_index[mesh.edges[e]] = e;
  }
  std::vector<std::array<std::size_t, 3>> tri_edges(mesh.triangles.size());
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto& tri = mesh.triangles[t];
    for (int i = 0; i < 3; ++i) {
      std::array<std::size_t, 2> key{tri[i], tri[(i + 1) % 3]};
      if (key[0] > key[1]) std::swap(key[0], key[1]);
      tri_edges[t][i] = edge_index.at(key);
    }
  }

  struct Node {
    VertexKind kind;
    Rational level;
    int crit;
  };
  std::vector<Node> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;  // node pairs
  std::vector<std::size_t> label(ne, kNone);
  std::vector<std::size_t> arc_start;
  std::vector<char> swept(nv, 0);

  auto active = [&](std::size_t e) {
    return swept[mesh.edges[e][0]] != swept[mesh.edges[e][1]];
  };

  for (const auto& unit : order.units) {
    std::set<std::size_t> ending;
    std::vector<std::size_t> lower_edges;
    for (std::size_t v : unit) {
      for (const auto& [w, e] : nbr[v]) {
        if (swept[w]) {
          ending.insert(label[e]);
          lower_edges.push_back(e);
        }
      }
    }
    for (std::size_t v : unit) swept[v] = 1;
    for (std::size_t e : lower_edges) label[e] = kNone;
    std::vector<std::size_t> new_edges;
    for (std::size_t v : unit) {
      for (const auto& [w, e] : nbr[v]) {
        if (!swept[w]) new_edges.push_back(e);
      }
    }

    const bool boundary = order.cycle_of[unit.front()] >= 0;
    const PointKind kind = report.kinds[unit.front()];
    if (!boundary && kind == PointKind::Regular) {
      if (ending.size() != 1) throw std::logic_error("regular vertex touches several level components");
      for (std::size_t e : new_edges) label[e] = *ending.begin();
      continue;
    }

    const std::size_t node = nodes.size();
    if (boundary) {
      nodes.push_back({VertexKind::Boundary, values[unit.front()], 0});
    } else {
      const VertexKind vk = kind == PointKind::Min   ? VertexKind::Min
                            : kind == PointKind::Max ? VertexKind::Max
                                                     : VertexKind::Saddle;
      nodes.push_back({vk, values[unit.front()], report.multiplicity[unit.front()]});
    }
    for (std::size_t l : ending) arcs.emplace_back(arc_start[l], node);

    // Relabel the level components touching this event.
    std::vector<std::size_t> pool = new_edges;
    for (std::size_t e = 0; e < ne; ++e) {
      if (label[e] != kNone && ending.count(label[e])) pool.push_back(e);
    }
    std::sort(pool.begin(), pool.end());
    for (std::size_t e : pool) label[e] = kNone;
    for (std::size_t seed : pool) {
      if (label[seed] != kNone) continue;
      const std::size_t fresh = arc_start.size();
      arc_start.push_back(node);
      label[seed] = fresh;
      std::vector<std::size_t> stack{seed};
      while (!stack.empty()) {
        const std::size_t e = stack.back();
        stack.pop_back();
        for (std::size_t t : mesh.edge_triangles[e]) {
          for (std::size_t f : tri_edges[t]) {
            if (f != e && active(f) && label[f] == kNone) {
              label[f] = fresh;
              stack.push_back(f);
            }
          }
        }
      }
    }
  }

  // Contract arcs joining equal levels.
  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : arcs) {
    if (nodes[a].level == nodes[b].level) {
      const std::size_t ra = find(a);
      const std::size_t rb = find(b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  std::map<std::size_t, Node> merged;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::size_t r = find(i);
    auto [it, fresh] = merged.emplace(r, nodes[i]);
    if (fresh) continue;
    Node& m = it->second;
    m.crit += nodes[i].crit;
    if (m.kind == VertexKind::Boundary || nodes[i].kind == VertexKind::Boundary) {
      m.kind = VertexKind::Boundary;
    } else if (m.kind != nodes[i].kind || m.kind == VertexKind::Saddle) {
      m.kind = VertexKind::Saddle;
    }
  }
  ReebGraph g;
  std::map<std::size_t, std::size_t> out_index;
  for (const auto& [r, node] : merged) {
    out_index[r] = g.add_vertex({"n" + std::to_string(g.vertex_count()), node.kind, node.level, node.crit});
  }
  for (const auto& [a, b] : arcs) {
    if (nodes[a].level == nodes[b].level) continue;
    g.add_edge("a" + std::to_string(g.edge_count()), out_index.at(find(a)), out_index.at(find(b)));
  }
  return g;
}

PipelineResult mesh_pipeline(const Mesh& mesh, const std::vector<Rational>& values,
                             bool with_group) {
  PipelineResult r;
  r.report = classify_vertices(mesh, values);
  r.reeb = extract_reeb(mesh, values);
  r.chi = mesh.euler_characteristic();
  r.boundary_count = static_cast<int>(mesh.boundary_count());
  r.morse_equality = morse_equality_check(r.report.c0, r.report.c1, r.report.c2, r.chi);
  r.reeb_betti = r.reeb.betti_number();
  r.betti_bound = mesh.first_betti_bound();
  r.betti_ok = r.reeb_betti <= static_cast<std::size_t>(r.betti_bound);
  r.function_class = classify_function(r.reeb);
  if (!with_group) return r;

  const bool multiple_saddle =
      std::any_of(r.report.multiplicity.begin(), r.report.multiplicity.end(),
                  [&](int s) { return s >= 2; });
  if (multiple_saddle || !r.function_class.is_simple) {
    r.skipped = kSkipNonSimple;
    return r;
  }
  if (r.chi == 1 && r.boundary_count == 1) {
    r.surface = SurfaceKind::Disk;
  } else if (r.chi == 0 && r.boundary_count == 2) {
    r.surface = SurfaceKind::Cylinder;
  } else {
    r.skipped = kSkipSurface;
    return r;
  }

  EnhancedReebGraph eg;
  eg.graph = r.reeb;
  eg.surface = *r.surface;
  const ReebGraph& g = eg.graph;
  // Root at a boundary lying below its neighbor when there is one.
  std::size_t root = kNone;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.vertex(v).kind != VertexKind::Boundary || g.degree(v) != 1) continue;
    const std::size_t w = g.other_end(g.incident(v).front(), v);
    if (g.vertex(w).level > g.vertex(v).level) {
      root = v;
      break;
    }
    if (root == kNone) root = v;
  }
  if (root == kNone) throw Error(ErrorCode::InvalidGraph, "no boundary vertex of degree 1 to root at");
  eg.root = root;

  std::vector<std::size_t> parent_edge(g.vertex_count(), kNone);
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<std::size_t> queue{root};
  seen[root] = 1;
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
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.vertex(v).kind != VertexKind::Saddle || parent_edge[v] == kNone) continue;
    Atom atom;
    atom.axial.push_back(parent_edge[v]);
    for (std::size_t e : g.incident(v)) {
      if (e != parent_edge[v]) atom.cyclic.push_back(e);
    }
    std::sort(atom.cyclic.begin(), atom.cyclic.end());
    eg.atoms.emplace(v, std::move(atom));
  }
  r.group = compute_group(eg);
  r.enhanced = std::move(eg);
  return r;
}

std::string format_pipeline(const PipelineResult& r, bool with_group) {
  std::ostringstream out;
  for (std::size_t v = 0; v < r.report.kinds.size(); ++v) {
    const PointKind k = r.report.kinds[v];
    if (k == PointKind::Regular || k == PointKind::Boundary) continue;
    out << "critical " << v << " " << to_string(k);
    if (k == PointKind::Saddle) out << " s=" << r.report.multiplicity[v];
    out << "\n";
  }
  out << "counts c0=" << r.report.c0 << " c1=" << r.report.c1 << " c2=" << r.report.c2 << "\n";
  out << "morse-equality " << r.report.c0 << "-" << r.report.c1 << "+" << r.report.c2 << "="
      << (r.report.c0 - r.report.c1 + r.report.c2) << " chi=" << r.chi << " "
      << (r.morse_equality ? "ok" : "FAIL") << "\n";
  out << "reeb vertices=" << r.reeb.vertex_count() << " edges=" << r.reeb.edge_count()
      << " betti=" << r.reeb_betti << " bound=" << r.betti_bound << " "
      << (r.betti_ok ? "ok" : "FAIL") << "\n";
  out << "function generic=" << (r.function_class.is_generic ? "true" : "false")
      << " simple=" << (r.function_class.is_simple ? "true" : "false") << "\n";
  if (with_group) {
    if (r.group) {
      out << "group " << print_word(*r.group) << "\n";
    } else {
      out << "skipped " << r.skipped << "\n";
    }
  }
  return out.str();
}

}  // namespace reebsym
