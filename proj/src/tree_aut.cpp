#include "reebsym/tree_aut.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "reebsym/error.hpp"

namespace reebsym {

namespace {
constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);
}

std::size_t Tree::add_vertex(const std::string& id) {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it != ids_.end()) return static_cast<std::size_t>(it - ids_.begin());
  ids_.push_back(id);
  adj_.emplace_back();
  return ids_.size() - 1;
}

void Tree::add_edge(std::size_t a, std::size_t b) {
  if (a >= ids_.size() || b >= ids_.size()) {
    throw Error(ErrorCode::InvalidArgument, "tree edge endpoint out of range");
  }
  if (a == b) throw Error(ErrorCode::InvalidGraph, "self-loop at " + ids_[a]);
  if (std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end()) {
    throw Error(ErrorCode::InvalidGraph, "repeated edge " + ids_[a] + " " + ids_[b]);
  }
  adj_[a].push_back(b);
  adj_[b].push_back(a);
  edges_.emplace_back(a, b);
}

void Tree::validate() const {
  const std::size_t n = ids_.size();
  if (n == 0) throw Error(ErrorCode::InvalidGraph, "empty tree");
  if (edges_.size() != n - 1) {
    throw Error(ErrorCode::InvalidGraph, "a tree on " + std::to_string(n) + " vertices needs " +
                                             std::to_string(n - 1) + " edges, got " +
                                             std::to_string(edges_.size()));
  }
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw Error(ErrorCode::InvalidGraph, "tree is not connected");
}

Tree Tree::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Tree t;
  for (std::size_t i = 0; i < n; ++i) t.add_vertex(std::to_string(i));
  for (const auto& [a, b] : edges) t.add_edge(a, b);
  t.validate();
  return t;
}

Tree parse_tree(std::string_view text) {
  Tree t;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string s; ls >> s;) tok.push_back(s);
    if (tok.empty()) continue;
    if (tok[0] == "EDGE") {
      if (tok.size() != 3) fail("EDGE expects two vertex ids");
      const std::size_t a = t.add_vertex(tok[1]);
      const std::size_t b = t.add_vertex(tok[2]);
      t.add_edge(a, b);
    } else if (tok[0] == "VERTEX") {
      if (tok.size() != 2) fail("VERTEX expects one id");
      t.add_vertex(tok[1]);
    } else {
      fail("unknown keyword '" + tok[0] + "'");
    }
  }
  t.validate();
  return t;
}

std::vector<std::size_t> tree_center(const Tree& t) {
  t.validate();
  const std::size_t n = t.vertex_count();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = t.neighbors(v).size();
    if (degree[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t leaf : layer) {
      for (std::size_t w : t.neighbors(leaf)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

namespace {

class RootedTree {
 public:
  explicit RootedTree(const Tree& t) : t_(t) {}

  std::string code(std::size_t v, std::size_t parent) const {
    std::vector<std::string> kids;
    for (std::size_t w : t_.neighbors(v)) {
      if (w != parent) kids.push_back(code(w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    return out + ")";
  }

  SymExpr group(std::size_t v, std::size_t parent) const {
    std::vector<std::pair<std::string, std::size_t>> kids;
    for (std::size_t w : t_.neighbors(v)) {
      if (w != parent) kids.emplace_back(code(w, v), w);
    }
    std::sort(kids.begin(), kids.end());
    std::vector<SymExpr> factors;
    for (std::size_t i = 0; i < kids.size();) {
      std::size_t j = i;
      while (j < kids.size() && kids[j].first == kids[i].first) ++j;
      factors.push_back(SymExpr::wr(group(kids[i].second, v), static_cast<int>(j - i)));
      i = j;
    }
    return normalize(SymExpr::prod(std::move(factors)));
  }

 private:
  const Tree& t_;
};

// Calls visit(image) for each automorphism, stopping early if it returns false.
template <class Visit>
void search_automorphisms(const Tree& t, Visit&& visit) {
  const std::size_t n = t.vertex_count();
  if (n > kBruteForceTreeLimit) {
    throw Error(ErrorCode::SizeCap, "brute force is limited to " +
                                        std::to_string(kBruteForceTreeLimit) + " vertices, got " +
                                        std::to_string(n));
  }
  t.validate();
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (const auto& [a, b] : t.edges()) adjacent[a][b] = adjacent[b][a] = 1;

  // BFS order: every vertex after the first has an earlier neighbor.
  std::vector<std::size_t> order{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t w : t.neighbors(order[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
    }
  }

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    if (i == n) {
      if (!visit(image)) stop = true;
      return;
    }
    const std::size_t v = order[i];
    for (std::size_t w = 0; w < n && !stop; ++w) {
      if (used[w] || t.neighbors(w).size() != t.neighbors(v).size()) continue;
      bool ok = true;
      for (std::size_t u : t.neighbors(v)) {
        if (image[u] >= 0 && !adjacent[static_cast<std::size_t>(image[u])][w]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[v] = static_cast<int>(w);
      used[w] = 1;
      self(self, i + 1);
      used[w] = 0;
      image[v] = -1;
    }
  };
  rec(rec, 0);
}

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

}  // namespace

std::string tree_canonical_form(const Tree& t) {
  const auto centers = tree_center(t);
  const RootedTree rt(t);
  if (centers.size() == 1) return rt.code(centers[0], kNoParent);
  std::string a = rt.code(centers[0], centers[1]);
  std::string b = rt.code(centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return "[" + a + b + "]";
}

SymExpr aut_tree(const Tree& t) {
  const auto centers = tree_center(t);
  const RootedTree rt(t);
  if (centers.size() == 1) return rt.group(centers[0], kNoParent);
  // Two centers: root at a virtual vertex subdividing the central edge.
  const std::size_t a = centers[0];
  const std::size_t b = centers[1];
  const SymExpr ga = rt.group(a, b);
  if (rt.code(a, b) == rt.code(b, a)) return normalize(SymExpr::wr(ga, 2));
  return normalize(SymExpr::prod({ga, rt.group(b, a)}));
}

std::uint64_t brute_force_aut_count(const Tree& t) {
  std::uint64_t count = 0;
  search_automorphisms(t, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<std::vector<int>> brute_force_automorphisms(const Tree& t) {
  std::vector<std::vector<int>> out;
  search_automorphisms(t, [&](const std::vector<int>& image) {
    out.push_back(image);
    return true;
  });
  return out;
}

ConcreteGroup brute_force_aut_group(const Tree& t) {
  const auto all = brute_force_automorphisms(t);
  if (all.size() > kDefaultEnumerationCap) {
    throw Error(ErrorCode::CapExceeded, "automorphism group of order " + std::to_string(all.size()) +
                                            " exceeds the enumeration cap");
  }
  // Greedy generating set: add any automorphism outside the current closure.
  std::vector<std::vector<int>> gens;
  std::vector<int> identity(t.vertex_count());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
  std::set<std::vector<int>> closure{identity};
  for (const auto& p : all) {
    if (closure.count(p)) continue;
    gens.push_back(p);
    std::vector<std::vector<int>> frontier(closure.begin(), closure.end());
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      for (const auto& g : gens) {
        auto next = compose(frontier[head], g);
        if (closure.insert(next).second) frontier.push_back(std::move(next));
      }
    }
  }
  return permutation_group(static_cast<int>(t.vertex_count()), std::move(gens));
}

std::vector<Tree> enumerate_trees(std::size_t max_vertices) {
  std::vector<Tree> out;
  if (max_vertices == 0) return out;
  using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;
  std::vector<EdgeList> layer{EdgeList{}};
  out.push_back(Tree::from_edges(1, {}));
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    std::map<std::string, EdgeList> next;  // keyed by canonical form
    for (const auto& edges : layer) {
      for (std::size_t v = 0; v + 1 < n; ++v) {
        EdgeList grown = edges;
        grown.emplace_back(v, n - 1);
        const Tree t = Tree::from_edges(n, grown);
        next.emplace(tree_canonical_form(t), std::move(grown));
      }
    }
    layer.clear();
    for (auto& [form, edges] : next) {
      out.push_back(Tree::from_edges(n, edges));
      layer.push_back(std::move(edges));
    }
  }
  return out;
}

}  // namespace reebsym
