#include <algorithm>

#include "reebsym/error.hpp"
#include "reebsym/reeb.hpp"
#include "subtree_coder.hpp"

namespace reebsym {

namespace detail {

SaddleView saddle_view(const EnhancedReebGraph& g, std::size_t parent_edge, std::size_t v) {
  auto it = g.atoms.find(v);
  if (it == g.atoms.end()) {
    throw Error(ErrorCode::InvalidGraph, "saddle " + g.graph.vertex(v).id + " has no atom");
  }
  const Atom& atom = it->second;
  SaddleView view;
  auto ax = std::find(atom.axial.begin(), atom.axial.end(), parent_edge);
  if (ax != atom.axial.end()) {
    view.axial.assign(atom.axial.begin(), ax);
    view.axial.insert(view.axial.end(), ax + 1, atom.axial.end());
    view.cyclic = atom.cyclic;
    return view;
  }
  auto cy = std::find(atom.cyclic.begin(), atom.cyclic.end(), parent_edge);
  if (cy == atom.cyclic.end()) {
    throw Error(ErrorCode::InvalidGraph,
                "atom of " + g.graph.vertex(v).id + " does not contain the edge it is entered by");
  }
  view.axial = atom.axial;
  view.anchored = true;
  view.cyclic.assign(cy + 1, atom.cyclic.end());
  view.cyclic.insert(view.cyclic.end(), atom.cyclic.begin(), cy);
  return view;
}

SubtreeCoder::SubtreeCoder(const EnhancedReebGraph& g)
    : g_(g), active_(g.graph.vertex_count(), 0) {}

const std::string& SubtreeCoder::code(std::size_t parent_edge, std::size_t vertex) {
  const std::size_t parent = g_.graph.other_end(parent_edge, vertex);
  const char was = active_[parent];
  active_[parent] = 1;
  try {
    const std::string& out = code_rec(parent_edge, vertex);
    active_[parent] = was;
    return out;
  } catch (...) {
    std::fill(active_.begin(), active_.end(), 0);
    throw;
  }
}

const std::string& SubtreeCoder::code_rec(std::size_t parent_edge, std::size_t v) {
  const auto key = std::make_pair(parent_edge, v);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const ReebGraph& graph = g_.graph;
  const ReebVertex& rv = graph.vertex(v);
  if (active_[v]) {
    throw Error(ErrorCode::CycleBelow, "cycle below vertex " + rv.id);
  }

  std::string out = "(";
  if (rv.kind != VertexKind::Saddle) {
    if (graph.degree(v) != 1) {
      throw Error(ErrorCode::InvalidGraph, "non-saddle " + rv.id + " is not a leaf");
    }
    out += rv.kind == VertexKind::Min ? "m" : rv.kind == VertexKind::Max ? "M" : "B";
    out += format_rational(rv.level) + ")";
    return memo_.emplace(key, std::move(out)).first->second;
  }

  active_[v] = 1;
  const SaddleView view = saddle_view(g_, parent_edge, v);
  auto child = [&](std::size_t e) { return code_rec(e, graph.other_end(e, v)); };

  std::vector<std::string> axial;
  for (std::size_t e : view.axial) axial.push_back(child(e));
  std::sort(axial.begin(), axial.end());
  std::vector<std::string> cyclic;
  for (std::size_t e : view.cyclic) cyclic.push_back(child(e));
  active_[v] = 0;

  out += "S" + format_rational(rv.level) + ";" + std::to_string(rv.crit_points) + "{";
  for (const auto& c : axial) out += c;
  out += "}";
  if (view.anchored) {
    out += "<";
    for (const auto& c : cyclic) out += c;
    out += ">";
  } else {
    // Least rotation of the cyclic word, compared factor by factor.
    const std::size_t d = cyclic.size();
    std::size_t best = 0;
    for (std::size_t r = 1; r < d; ++r) {
      for (std::size_t i = 0; i < d; ++i) {
        const auto& a = cyclic[(r + i) % d];
        const auto& b = cyclic[(best + i) % d];
        if (a != b) {
          if (a < b) best = r;
          break;
        }
      }
    }
    out += "[";
    for (std::size_t i = 0; i < d; ++i) out += cyclic[(best + i) % d];
    out += "]";
  }
  out += ")";
  return memo_.emplace(key, std::move(out)).first->second;
}

}  // namespace detail

CanonicalCode canonical_code(const EnhancedReebGraph& g, std::size_t parent_edge, std::size_t vertex) {
  detail::SubtreeCoder coder(g);
  return {coder.code(parent_edge, vertex)};
}

CyclicSymmetry cyclic_symmetry(std::span<const CanonicalCode> word) {
  CyclicSymmetry out;
  const std::size_t d = word.size();
  if (d == 0) return out;
  std::size_t period = d;
  for (std::size_t p = 1; p < d; ++p) {
    if (d % p != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) ok = word[i] == word[(i + p) % d];
    if (ok) {
      period = p;
      break;
    }
  }
  out.m = static_cast<int>(d / period);
  for (std::size_t i = 0; i < period; ++i) {
    std::vector<std::size_t> orbit;
    for (std::size_t j = i; j < d; j += period) orbit.push_back(j);
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace reebsym
