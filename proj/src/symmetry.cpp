#include "reebsym/symmetry.hpp"

#include <algorithm>

#include "reebsym/error.hpp"
#include "subtree_coder.hpp"

namespace reebsym {

namespace {

constexpr std::size_t kMaxAxialSlots = 2;

struct Below {
  GroupExpr expr;
  bool has_cycle = false;
};

class GroupSolver {
 public:
  explicit GroupSolver(const EnhancedReebGraph& g)
      : g_(g), graph_(g.graph), bridge_(graph_.bridges()), coder_(g) {}

  GroupExpr solve() {
    const std::size_t e = graph_.incident(g_.root).front();
    return normalize(descend(e, graph_.other_end(e, g_.root)).expr);
  }

 private:
  bool on_cycle(std::size_t v) const {
    const auto inc = graph_.incident(v);
    return std::any_of(inc.begin(), inc.end(), [&](std::size_t e) { return !bridge_[e]; });
  }

  const Atom& atom_of(std::size_t v) const {
    auto it = g_.atoms.find(v);
    if (it == g_.atoms.end()) {
      throw Error(ErrorCode::InvalidGraph, "saddle " + graph_.vertex(v).id + " has no atom");
    }
    if (it->second.axial.size() > kMaxAxialSlots) {
      throw Error(ErrorCode::UnsupportedAtom,
                  "saddle " + graph_.vertex(v).id + " has " +
                      std::to_string(it->second.axial.size()) + " axial slots");
    }
    return it->second;
  }

  Below descend(std::size_t parent_edge, std::size_t v) {
    if (graph_.vertex(v).kind != VertexKind::Saddle) return {GroupExpr::unit(), false};
    if (on_cycle(v)) return {spine(parent_edge, v), true};

    atom_of(v);
    const detail::SaddleView view = detail::saddle_view(g_, parent_edge, v);
    std::vector<GroupExpr> factors;
    bool has_cycle = false;
    for (std::size_t e : view.axial) {
      Below b = descend(e, graph_.other_end(e, v));
      has_cycle |= b.has_cycle;
      factors.push_back(std::move(b.expr));
    }
    has_cycle |= cyclic_part(v, view.cyclic, view.anchored, factors);
    return {normalize(GroupExpr::prod(std::move(factors))), has_cycle};
  }

  // Every vertex of the cycle is fixed; only subtrees hanging off it move.
  GroupExpr spine(std::size_t entry_edge, std::size_t start) {
    std::vector<std::size_t> cycle_vertices{start};
    std::size_t v = start;
    std::size_t came_by = static_cast<std::size_t>(-1);
    while (true) {
      std::size_t next_edge = static_cast<std::size_t>(-1);
      for (std::size_t e : graph_.incident(v)) {
        if (!bridge_[e] && e != came_by) {
          next_edge = e;
          break;
        }
      }
      v = graph_.other_end(next_edge, v);
      came_by = next_edge;
      if (v == start) break;
      cycle_vertices.push_back(v);
    }

    std::vector<GroupExpr> factors;
    for (std::size_t c : cycle_vertices) {
      const Atom& atom = atom_of(c);
      auto fixed = [&](std::size_t e) {
        return !bridge_[e] || (c == start && e == entry_edge);
      };
      for (std::size_t e : atom.axial) {
        if (!fixed(e)) factors.push_back(descend(e, graph_.other_end(e, c)).expr);
      }
      const bool anchored = std::any_of(atom.cyclic.begin(), atom.cyclic.end(), fixed);
      std::vector<std::size_t> word;
      for (std::size_t e : atom.cyclic) {
        if (!fixed(e)) word.push_back(e);
      }
      cyclic_part(c, word, anchored, factors);
    }
    return normalize(GroupExpr::prod(std::move(factors)));
  }

  // Appends the contribution of the cyclic slots at `v`; returns whether a
  // child subtree contains the cycle.
  bool cyclic_part(std::size_t v, const std::vector<std::size_t>& word, bool anchored,
                   std::vector<GroupExpr>& factors) {
    std::vector<Below> children;
    bool has_cycle = false;
    for (std::size_t e : word) {
      children.push_back(descend(e, graph_.other_end(e, v)));
      has_cycle |= children.back().has_cycle;
    }
    int m = 1;
    CyclicSymmetry sym;
    // A child holding the cycle is unique, and no nontrivial rotation
    // fixes a slot.
    if (!anchored && !has_cycle && word.size() > 1) {
      std::vector<CanonicalCode> codes;
      for (std::size_t e : word) codes.push_back({coder_.code(e, graph_.other_end(e, v))});
      sym = cyclic_symmetry(codes);
      m = sym.m;
    }
    if (m == 1) {
      for (auto& c : children) factors.push_back(std::move(c.expr));
    } else {
      std::vector<GroupExpr> reps;
      for (const auto& orbit : sym.orbits) reps.push_back(children[orbit.front()].expr);
      factors.push_back(GroupExpr::wr(GroupExpr::prod(std::move(reps)), m));
    }
    return has_cycle;
  }

  const EnhancedReebGraph& g_;
  const ReebGraph& graph_;
  std::vector<bool> bridge_;
  detail::SubtreeCoder coder_;
};

// ---------------------------------------------------------------------------

class Realizer {
 public:
  EnhancedReebGraph run(const GroupExpr& expr) {
    out_.surface = SurfaceKind::Disk;
    out_.root = vertex(VertexKind::Boundary, Rational(0), 0);
    build(expr, out_.root, Rational(0));
    return std::move(out_);
  }

 private:
  std::size_t vertex(VertexKind kind, Rational level, int crit) {
    return out_.graph.add_vertex(
        {"v" + std::to_string(out_.graph.vertex_count()), kind, std::move(level), crit});
  }

  std::size_t edge(std::size_t a, std::size_t b) {
    return out_.graph.add_edge("e" + std::to_string(out_.graph.edge_count()), a, b);
  }

  // Hangs a realization of `expr` above `parent`, starting one unit higher
  // than `base`. Returns the connecting edge.
  std::size_t build(const GroupExpr& expr, std::size_t parent, const Rational& base) {
    switch (expr.kind()) {
      case GroupExpr::Kind::Unit: {
        const std::size_t top = vertex(VertexKind::Max, base + 1, 1);
        return edge(parent, top);
      }
      case GroupExpr::Kind::Prod:
        return build_chain(expr.factors(), parent, base);
      case GroupExpr::Kind::Wr:
        break;
    }
    const int n = expr.exponent();
    const Rational level = base + 1;
    const std::size_t s = vertex(VertexKind::Saddle, level, n == 2 ? 1 : n);
    const std::size_t pe = edge(parent, s);
    Atom atom;
    atom.axial.push_back(pe);
    if (n > 2) {
      const std::size_t inner = vertex(VertexKind::Min, base + Rational(1, 2), 1);
      atom.axial.push_back(edge(s, inner));
    }
    for (int i = 0; i < n; ++i) atom.cyclic.push_back(build(expr.base(), s, level));
    out_.atoms.emplace(s, std::move(atom));
    return pe;
  }

  // Binary chain of simple saddles; the two branches of each saddle sit at
  // different offsets so they are never swapped.
  std::size_t build_chain(std::span<const GroupExpr> factors, std::size_t parent,
                          const Rational& base) {
    if (factors.size() == 1) return build(factors.front(), parent, base);
    const Rational level = base + 1;
    const std::size_t s = vertex(VertexKind::Saddle, level, 1);
    const std::size_t pe = edge(parent, s);
    Atom atom;
    atom.axial.push_back(pe);
    atom.cyclic.push_back(build(factors.front(), s, level + Rational(1, 3)));
    atom.cyclic.push_back(build_chain(factors.subspan(1), s, level + Rational(2, 3)));
    out_.atoms.emplace(s, std::move(atom));
    return pe;
  }

  EnhancedReebGraph out_;
};

int node_count(const GroupExpr& e) {
  int n = e.is_unit() ? 0 : 1;
  for (const auto& f : e.factors()) n += node_count(f);
  return n;
}

GroupExpr random_with_nodes(std::mt19937_64& rng, int nodes, int max_exponent) {
  if (nodes == 0) return GroupExpr::unit();
  std::uniform_int_distribution<int> coin(0, 1);
  if (nodes < 3 || coin(rng) == 0) {
    std::uniform_int_distribution<int> exp(2, max_exponent);
    return GroupExpr::wr(random_with_nodes(rng, nodes - 1, max_exponent), exp(rng));
  }
  // Product: split the remaining nodes into >= 2 positive parts.
  int rest = nodes - 1;
  std::vector<GroupExpr> factors;
  while (rest > 0) {
    const int hi = factors.empty() ? rest - 1 : rest;
    std::uniform_int_distribution<int> part(1, hi);
    const int k = part(rng);
    factors.push_back(random_with_nodes(rng, k, max_exponent));
    rest -= k;
  }
  return GroupExpr::prod(std::move(factors));
}

}  // namespace

GroupExpr compute_group(const EnhancedReebGraph& g) {
  const ValidationReport report = validate_reeb(g);
  if (!report.ok()) {
    throw Error(ErrorCode::InvalidGraph, report.violations.front().code + ": " +
                                             report.violations.front().detail);
  }
  return GroupSolver(g).solve();
}

GroupExpr combine_decomposition(const std::vector<EnhancedReebGraph>& pieces) {
  if (pieces.empty()) throw Error(ErrorCode::InvalidArgument, "no pieces to combine");
  std::vector<GroupExpr> factors;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    try {
      factors.push_back(compute_group(pieces[i]));
    } catch (const Error& e) {
      throw Error(e.code(), "piece " + std::to_string(i) + ": " + e.what());
    }
  }
  return normalize(GroupExpr::prod(std::move(factors)));
}

EnhancedReebGraph realize_reeb(const GroupExpr& expr) { return Realizer().run(normalize(expr)); }

RoundTripResult round_trip(const GroupExpr& expr) {
  RoundTripResult r;
  r.expected = normalize(expr);
  try {
    r.got = compute_group(realize_reeb(expr));
  } catch (const Error& e) {
    r.detail = std::string(to_string(e.code())) + ": " + e.what();
    return r;
  }
  r.ok = r.got == r.expected;
  if (!r.ok) r.detail = "expected " + print_word(r.expected) + " got " + print_word(r.got);
  return r;
}

std::uint64_t realized_vertex_count(const GroupExpr& expr) {
  struct Count {
    static std::uint64_t below(const GroupExpr& e) {
      switch (e.kind()) {
        case GroupExpr::Kind::Unit: return 1;
        case GroupExpr::Kind::Prod: {
          std::uint64_t n = e.factors().size() - 1;
          for (const auto& f : e.factors()) n += below(f);
          return n;
        }
        case GroupExpr::Kind::Wr: {
          const auto n = static_cast<std::uint64_t>(e.exponent());
          return (n == 2 ? 1 : 2) + n * below(e.base());
        }
      }
      return 0;
    }
  };
  return 1 + Count::below(normalize(expr));
}

GroupExpr random_expr(std::mt19937_64& rng, int max_nodes, int max_exponent,
                      std::uint64_t max_vertices) {
  if (max_nodes < 1 || max_exponent < 2 || max_vertices < 4) {
    throw Error(ErrorCode::InvalidArgument,
                "random_expr needs max_nodes >= 1, max_exponent >= 2 and max_vertices >= 4");
  }
  std::uniform_int_distribution<int> size(1, max_nodes);
  while (true) {
    GroupExpr e = normalize(random_with_nodes(rng, size(rng), max_exponent));
    if (node_count(e) <= max_nodes && realized_vertex_count(e) <= max_vertices) return e;
  }
}

}  // namespace reebsym
