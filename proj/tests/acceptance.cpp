// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "reebsym/cli.hpp"
#include "reebsym/error.hpp"
#include "reebsym/group.hpp"
#include "reebsym/mesh.hpp"
#include "reebsym/reeb.hpp"
#include "reebsym/symmetry.hpp"
#include "reebsym/tree_aut.hpp"
#include "reebsym/word.hpp"

using namespace reebsym;
using testsupport::data_path;
using testsupport::slurp;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

struct Invocation {
  std::vector<std::string> args;
  int code = 0;
  std::string out;
  std::string err;
};

// Every CLI call made by criteria 1-8, replayed by criterion 9.
std::vector<Invocation> g_invocations;

Invocation cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  g_invocations.push_back({std::move(args), code, out.str(), err.str()});
  return g_invocations.back();
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

bool only_binary_wreaths(const GroupExpr& e) {
  switch (e.kind()) {
    case GroupExpr::Kind::Unit: return true;
    case GroupExpr::Kind::Wr: return e.exponent() == 2 && only_binary_wreaths(e.base());
    case GroupExpr::Kind::Prod:
      for (const auto& f : e.factors())
        if (!only_binary_wreaths(f)) return false;
      return true;
  }
  return false;
}

std::vector<GroupExpr> criterion1_exprs() {
  auto out = enumerate_exprs(3);
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 200; ++i) out.push_back(random_expr(rng, 10));
  return out;
}

const char* const kSimpleFixtures[] = {
    "simple_01_single_edge",     "simple_02_equal_pair", "simple_03_unequal_pair", "simple_04_nested_pairs",
    "simple_05_product_of_pairs", "simple_06_min_and_max", "simple_07_boundary_on_top", "simple_08_mixed",
    "simple_09_cylinder_tree",    "simple_10_cylinder_cycle",
};

Outcome roundtrip_all() {
  Outcome r;
  const auto exprs = criterion1_exprs();
  std::size_t fails = 0;
  for (const auto& e : exprs) {
    const auto rt = round_trip(e);
    if (!rt.ok) {
      if (fails++ == 0) r.fail("round trip of " + print_word(e) + ": " + rt.detail);
    }
  }
  const auto ex = cli({"roundtrip", "--exhaustive", "3"});
  r.expect(ex.code == 0 && ex.out.find("summary ok=219 fail=0\n") != std::string::npos, "cli exhaustive run");
  const auto rnd = cli({"roundtrip", "--random", "200", "--seed", "20240611", "--max-nodes", "10"});
  r.expect(rnd.code == 0 && rnd.out.find("summary ok=200 fail=0\n") != std::string::npos, "cli random run");
  r.note = std::to_string(exprs.size() - fails) + "/" + std::to_string(exprs.size()) + " expressions" +
           (r.ok ? "" : "; " + r.note);
  return r;
}

Outcome simple_iff_binary() {
  Outcome r;
  std::size_t checked = 0;
  for (const auto& e : criterion1_exprs()) {
    if (!only_binary_wreaths(e)) continue;
    ++checked;
    const auto g = realize_reeb(e);
    r.expect(classify_function(g).is_simple, "realization of " + print_word(e) + " is not simple");
    r.expect(is_simple_class(compute_group(g)), "group of " + print_word(e) + " left the two-exponent class");
  }
  for (const char* name : kSimpleFixtures) {
    const std::string path = data_path(std::string("reeb/") + name + ".reeb");
    const auto g = parse_reeb(slurp(std::string("reeb/") + name + ".reeb"));
    r.expect(classify_function(g).is_simple, std::string(name) + " is not simple");
    r.expect(is_simple_class(compute_group(g)), std::string(name) + " gave a non-binary wreath");
    const auto c = cli({"group-of", path});
    r.expect(c.code == 0 && cli({"word", "simple", c.out.substr(0, c.out.size() - 1)}).out == "true\n",
             std::string(name) + " via cli");
    ++checked;
  }
  if (r.ok) r.note = std::to_string(checked) + " cases";
  return r;
}

// Random binary tree: every saddle has one edge down to its parent and two
// children, each a Max above it, a Min just below it, or another saddle.
EnhancedReebGraph random_generic_disk(std::mt19937_64& rng, int saddles) {
  EnhancedReebGraph g;
  g.surface = SurfaceKind::Disk;
  ReebGraph& r = g.graph;
  int next_level = 0;
  int next_id = 0;
  auto vid = [&] { return "v" + std::to_string(next_id++); };
  auto eid = [&] { return "e" + std::to_string(r.edge_count()); };
  g.root = r.add_vertex({vid(), VertexKind::Boundary, Rational(next_level++), 0});
  std::function<std::size_t(std::size_t, int)> grow = [&](std::size_t parent, int budget) -> std::size_t {
    if (budget == 0) {
      const auto m = r.add_vertex({vid(), VertexKind::Max, Rational(next_level++), 1});
      return r.add_edge(eid(), parent, m);
    }
    const Rational level(next_level++);
    const auto s = r.add_vertex({vid(), VertexKind::Saddle, level, 1});
    const auto up = r.add_edge(eid(), parent, s);
    const int left = static_cast<int>(rng() % static_cast<unsigned>(budget));
    Atom atom;
    atom.axial.push_back(up);
    for (int side : {left, budget - 1 - left}) {
      if (side == 0 && rng() % 3 == 0) {
        const auto m = r.add_vertex({vid(), VertexKind::Min, level - Rational(1, 1000 + next_id), 1});
        atom.cyclic.push_back(r.add_edge(eid(), s, m));
      } else {
        atom.cyclic.push_back(grow(s, side));
      }
    }
    g.atoms[s] = atom;
    return up;
  };
  grow(g.root, saddles);
  return g;
}

Outcome generic_trivial() {
  Outcome r;
  std::mt19937_64 rng(77);
  for (int i = 0; i < 20; ++i) {
    const auto g = random_generic_disk(rng, 1 + i % 8);
    const auto tag = "graph " + std::to_string(i);
    r.expect(validate_reeb(g).ok(), tag + " invalid: " + validate_reeb(g).to_string());
    const auto fc = classify_function(g);
    r.expect(fc.is_generic, tag + " not generic");
    r.expect(compute_group(g).is_unit(), tag + " gave " + print_word(compute_group(g)));
  }
  if (r.ok) r.note = "20 graphs";
  return r;
}

Outcome wreath_arithmetic() {
  Outcome r;
  std::mt19937_64 rng(4);
  std::vector<std::pair<std::string, ConcreteGroup>> bases = {
      {"1", trivial_group()},
      {"Z2", make_cyclic(2)},
      {"Z3", make_cyclic(3)},
      {"Z4", make_cyclic(4)},
      {"Z2xZ2", product_group(make_cyclic(2), make_cyclic(2))},
  };
  int groups = 0;
  for (const auto& [name, a] : bases) {
    const std::size_t k = a.order();
    for (int n = 1; n <= 3; ++n) {
      std::size_t pow = 1;
      for (int i = 0; i < n; ++i) pow *= k;
      const std::size_t fact = n == 3 ? 6 : static_cast<std::size_t>(n);
      for (bool sym : {false, true}) {
        const ConcreteGroup g = sym ? wreath_sym(a, n) : wreath_cyclic(a, n);
        const std::string tag = name + (sym ? " wrS" : " wrZ") + std::to_string(n);
        const auto& el = g.elements();
        r.expect(el.size() == pow * (sym ? fact : static_cast<std::size_t>(n)), tag + " order");
        for (int t = 0; t < 1000; ++t) {
          const auto& x = el[rng() % el.size()];
          const auto& y = el[rng() % el.size()];
          const auto& z = el[rng() % el.size()];
          if (!(g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z)))) {
            r.fail(tag + " associativity");
            break;
          }
          if (!(g.multiply(g.identity(), x) == x) || !(g.multiply(x, g.identity()) == x)) {
            r.fail(tag + " identity");
            break;
          }
          if (!(g.multiply(x, g.invert(x)) == g.identity()) || !(g.multiply(g.invert(x), x) == g.identity())) {
            r.fail(tag + " inverse");
            break;
          }
        }
        ++groups;
      }
    }
  }
  auto wz = [](std::vector<int> c, int shift) {
    std::vector<GroupElement> coords;
    for (int x : c) coords.push_back(GroupElement::residue(x));
    return GroupElement::cyclic_wreath(std::move(coords), shift);
  };
  const auto z2z3 = wreath_cyclic(make_cyclic(2), 3);
  r.expect(z2z3.multiply(wz({1, 0, 0}, 1), wz({0, 1, 0}, 2)) == wz({0, 0, 0}, 0), "worked product in Z2 wr Z3");
  for (const char* w : {"((1)wrZ2)wrZ3", "(((1)wrZ2)x((1)wrZ2))wrZ2"}) {
    const auto c = cli({"word", "order", w});
    r.expect(c.out == expr_order(parse_word(w)).str() + "\n", std::string("cli order of ") + w);
  }
  if (r.ok) r.note = std::to_string(groups) + " groups x 1000 triples";
  return r;
}

Outcome example_three() {
  Outcome r;
  const std::string both = "NonMember: no-unique-roots-factor, top-not-cyclic\n";
  for (auto [base, top] : {std::pair{"2", "2,2"}, {"2", "2,4"}, {"3", "3,3"}}) {
    const auto c = cli({"member", base, top});
    r.expect(c.code == 0 && c.out == both, std::string("member ") + base + " " + top + " -> " + c.out);
  }
  for (const char* base : {"2", "3", "4", "6", "2,2", "2,4", "3,3"}) {
    for (const char* top : {"2", "3", "4", "5", "6", "12"}) {
      const auto c = cli({"member", base, top});
      r.expect(c.out == "Member\n", std::string("member ") + base + " " + top + " -> " + c.out);
    }
  }
  if (r.ok) r.note = "3 non-members, 42 cyclic tops";
  return r;
}

Outcome neumann() {
  Outcome r;
  const auto lhs = realize_concrete(parse_word("((1)wrZ3)wrZ2"));
  const auto rhs = product_group(make_cyclic(3), wreath_sym(trivial_group(), 3));
  r.expect(lhs.order() == 18 && rhs.order() == 18, "orders are not 18");
  r.expect(are_isomorphic(lhs, rhs), "Z3 wr Z2 not isomorphic to Z3 x S3");
  r.expect(!are_isomorphic(make_cyclic(4), product_group(make_cyclic(2), make_cyclic(2))), "Z4 isomorphic to Z2xZ2");
  r.expect(cli({"oracle", "iso", "((1)wrZ4)", "((1)wrZ2)x((1)wrZ2)"}).out == "false\n", "cli iso Z4");
  r.expect(cli({"oracle", "iso", "(1)wrZ6", "((1)wrZ3)x((1)wrZ2)"}).out == "true\n", "cli iso Z6");
  return r;
}

Outcome jordan() {
  Outcome r;
  const auto trees = enumerate_trees(8);
  r.expect(trees.size() == 48, "expected 48 trees, got " + std::to_string(trees.size()));
  std::size_t iso_checked = 0;
  for (const auto& t : trees) {
    const SymExpr e = aut_tree(t);
    const auto brute = brute_force_aut_count(t);
    const std::string tag = tree_canonical_form(t);
    r.expect(expr_order(e) == brute, "order mismatch on " + tag);
    if (t.vertex_count() <= 7) {
      r.expect(are_isomorphic(realize_concrete(e), brute_force_aut_group(t)), "not isomorphic on " + tag);
      ++iso_checked;
    }
  }
  for (const char* f : {"h_tree.txt", "star3.txt", "path5.txt"}) {
    const auto c = cli({"aut-tree", data_path(std::string("trees/") + f)});
    const auto t = parse_tree(slurp(std::string("trees/") + f));
    r.expect(c.code == 0 && c.out.find("order " + std::to_string(brute_force_aut_count(t)) + "\n") != std::string::npos,
             std::string("cli aut-tree ") + f);
  }
  if (r.ok) r.note = std::to_string(trees.size()) + " trees, " + std::to_string(iso_checked) + " isomorphism checks";
  return r;
}

Outcome mesh_fixtures() {
  Outcome r;
  auto run = [&](const std::string& name) -> Invocation {
    return cli({"extract", data_path("meshes/" + name + ".off"), data_path("meshes/" + name + ".vals"), "--pipeline"});
  };
  auto has = [](const Invocation& c, const std::string& line) { return c.out.find(line + "\n") != std::string::npos; };

  const auto oct = run("octahedron");
  r.expect(has(oct, "reeb vertices=2 edges=1 betti=0 bound=0 ok"), "octahedron reeb");
  r.expect(has(oct, "morse-equality 1-0+1=2 chi=2 ok"), "octahedron morse");
  const auto torus = run("torus");
  r.expect(has(torus, "reeb vertices=4 edges=4 betti=1 bound=2 ok"), "torus reeb");
  r.expect(has(torus, "morse-equality 1-2+1=0 chi=0 ok"), "torus morse");
  r.expect(has(run("two_bump_generic"), "group 1"), "generic two-bump group");
  r.expect(has(run("two_bump_symmetric"), "group (1)wrZ2"), "symmetric two-bump group");
  r.expect(has(run("monkey_saddle"), "skipped " + std::string(kSkipNonSimple)), "monkey saddle skip");

  // Same verdicts through the library.
  const Mesh m = load_mesh(slurp("meshes/two_bump_symmetric.off"));
  const auto p = mesh_pipeline(m, load_values(slurp("meshes/two_bump_symmetric.vals"), m));
  r.expect(p.group && *p.group == GroupExpr::wr(GroupExpr::unit(), 2), "library symmetric group");
  for (const auto* c : {&oct, &torus}) r.expect(c->code == 0, "extract exit code");
  return r;
}

Outcome determinism() {
  Outcome r;
  const auto first = g_invocations;
  for (const auto& inv : first) {
    std::ostringstream out, err;
    const int code = run_cli(inv.args, out, err);
    r.expect(code == inv.code && out.str() == inv.out && err.str() == inv.err, "differs: " + join(inv.args));
  }
  if (r.ok) r.note = std::to_string(first.size()) + " invocations";
  return r;
}

}  // namespace

// With an argument N, only criterion N is reported. Criterion 9 still runs
// 1-8 silently first, since it replays their invocations.
int main(int argc, char** argv) {
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  struct Criterion {
    int id;
    const char* title;
    double limit_s;  // 0 means no time limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "round trip over enumerated and random words", 30, roundtrip_all},
      {2, "simple functions and binary wreaths", 0, simple_iff_binary},
      {3, "generic disk graphs give the trivial group", 0, generic_trivial},
      {4, "wreath arithmetic", 10, wreath_arithmetic},
      {5, "non-membership of abelian wreaths", 0, example_three},
      {6, "isomorphism sanity", 5, neumann},
      {7, "tree automorphism groups", 60, jordan},
      {8, "mesh pipeline fixtures", 10, mesh_fixtures},
      {9, "cli output is deterministic", 0, determinism},
  };
  int failed = 0;
  int reported = 0;
  for (const auto& c : criteria) {
    const bool report = only == 0 || only == c.id;
    if (!report && !(only == 9 && c.id < 9)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) o.fail("took longer than " + std::to_string(static_cast<int>(c.limit_s)) + " s");
    if (!report) continue;
    ++reported;
    if (!o.ok) ++failed;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                o.note.empty() ? "" : " - ", o.note.c_str());
  }
  if (reported == 0) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  std::printf("%d of %d criteria passed\n", reported - failed, reported);
  return failed == 0 ? 0 : 1;
}
