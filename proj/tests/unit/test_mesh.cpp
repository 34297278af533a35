#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "../support.hpp"
#include "reebsym/error.hpp"
#include "reebsym/mesh.hpp"
#include "reebsym/symmetry.hpp"

using namespace reebsym;
using testsupport::slurp;

namespace {
struct Loaded {
  Mesh mesh;
  std::vector<Rational> values;
};

Loaded load(const std::string& name) {
  Mesh m = load_mesh(slurp("meshes/" + name + ".off"));
  auto v = load_values(slurp("meshes/" + name + ".vals"), m);
  return {std::move(m), std::move(v)};
}

ErrorCode load_error(const std::string& name) {
  try {
    load_mesh(slurp("meshes/" + name + ".off"));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;
}

// Same surface with vertices relabelled by `perm` and triangles reversed in order.
std::string shuffle_off(const Loaded& l, const std::vector<std::size_t>& perm) {
  std::ostringstream os;
  os << "OFF\n" << l.mesh.vertex_count() << " " << l.mesh.triangles.size() << " 0\n";
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const auto& p = l.mesh.positions[inv[i]];
    os << p[0] << " " << p[1] << " " << p[2] << "\n";
  }
  for (auto it = l.mesh.triangles.rbegin(); it != l.mesh.triangles.rend(); ++it) {
    os << "3 " << perm[(*it)[1]] << " " << perm[(*it)[2]] << " " << perm[(*it)[0]] << "\n";
  }
  return os.str();
}
}  // namespace

TEST_CASE("loading") {
  const Mesh t = load_mesh(slurp("meshes/tetrahedron.off"));
  CHECK(t.euler_characteristic() == 2);
  CHECK(t.boundary_count() == 0);
  CHECK(t.genus() == 0);
  const Mesh torus = load_mesh(slurp("meshes/torus.off"));
  CHECK(torus.genus() == 1);
  CHECK(torus.first_betti_bound() == 2);
  const Mesh ann = load_mesh(slurp("meshes/annulus.off"));
  CHECK(ann.boundary_count() == 2);
  CHECK(ann.first_betti_bound() == 1);
  CHECK(load_error("nonmanifold_edge") == ErrorCode::NonManifoldEdge);
  CHECK(load_error("bowtie") == ErrorCode::NonManifoldVertex);
  CHECK(load_error("two_pieces") == ErrorCode::Disconnected);
  CHECK(load_error("mobius") == ErrorCode::NonOrientable);
  CHECK_THROWS_AS(load_mesh("OFF\n3 1 0\n0 0 0\n1 0 0\n"), Error);
}

TEST_CASE("values") {
  const Mesh t = load_mesh(slurp("meshes/tetrahedron.off"));
  CHECK_THROWS_AS(load_values("1\n2\n", t), Error);
  const auto v = load_values("# ties are fine\n1\n1\n1/2\n0.25\n", t);
  CHECK(v.size() == 4);
  const auto r = classify_vertices(t, v);
  CHECK(r.c0 == 1);
  CHECK(r.c2 == 1);
}

TEST_CASE("classification") {
  auto oct = load("octahedron");
  auto r = classify_vertices(oct.mesh, oct.values);
  CHECK(r.c0 == 1);
  CHECK(r.c1 == 0);
  CHECK(r.c2 == 1);
  CHECK(std::count(r.kinds.begin(), r.kinds.end(), PointKind::Regular) == 4);
  auto monkey = load("monkey_saddle");
  r = classify_vertices(monkey.mesh, monkey.values);
  CHECK(std::count(r.multiplicity.begin(), r.multiplicity.end(), 2) == 1);
  auto torus = load("torus");
  r = classify_vertices(torus.mesh, torus.values);
  CHECK(r.c0 - r.c1 + r.c2 == 0);
}

TEST_CASE("extraction") {
  auto oct = load("octahedron");
  auto g = extract_reeb(oct.mesh, oct.values);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  auto torus = load("torus");
  g = extract_reeb(torus.mesh, torus.values);
  CHECK(g.vertex_count() == 4);
  CHECK(g.betti_number() == 1);
  auto bump = load("two_bump_generic");
  const auto p = mesh_pipeline(bump.mesh, bump.values);
  CHECK(p.report.c0 == 0);
  CHECK(p.report.c1 == 1);
  CHECK(p.report.c2 == 2);
  CHECK(p.reeb.vertex_count() == 4);
  CHECK(validate_graph(p.reeb, SurfaceKind::Disk).ok());
}

TEST_CASE("constant boundary required") {
  auto ann = load("annulus");
  auto v = ann.values;
  v[ann.mesh.boundary_cycles[0][0]] += 1;
  CHECK_THROWS_AS(extract_reeb(ann.mesh, v), Error);
}

TEST_CASE("pipeline verdicts") {
  auto gen = load("two_bump_generic");
  auto r = mesh_pipeline(gen.mesh, gen.values);
  REQUIRE(r.group);
  CHECK(r.group->is_unit());
  CHECK(r.function_class.is_generic);
  auto sym = load("two_bump_symmetric");
  r = mesh_pipeline(sym.mesh, sym.values);
  REQUIRE(r.group);
  CHECK(print_word(*r.group) == "(1)wrZ2");
  CHECK(is_simple_class(*r.group));
  auto monkey = load("monkey_saddle");
  r = mesh_pipeline(monkey.mesh, monkey.values);
  CHECK_FALSE(r.group);
  CHECK(r.skipped == kSkipNonSimple);
  auto oct = load("octahedron");
  r = mesh_pipeline(oct.mesh, oct.values);
  CHECK(r.skipped == kSkipSurface);
  CHECK(r.morse_equality);
  auto ann = load("annulus");
  r = mesh_pipeline(ann.mesh, ann.values);
  REQUIRE(r.group);
  CHECK(r.group->is_unit());
  CHECK(r.betti_ok);
}

TEST_CASE("leaf and saddle counts match the report") {
  for (const char* name : {"octahedron", "torus", "two_bump_generic", "two_bump_symmetric", "annulus", "monkey_saddle"}) {
    CAPTURE(name);
    auto l = load(name);
    const auto r = mesh_pipeline(l.mesh, l.values, false);
    int mins = 0, maxs = 0, saddles = 0;
    for (const auto& v : r.reeb.vertices()) {
      if (v.kind == VertexKind::Min) mins += v.crit_points;
      if (v.kind == VertexKind::Max) maxs += v.crit_points;
      if (v.kind == VertexKind::Saddle) saddles += v.crit_points;
    }
    CHECK(mins == r.report.c0);
    CHECK(maxs == r.report.c2);
    CHECK(saddles == r.report.c1);
    CHECK(r.morse_equality);
    CHECK(r.betti_ok);
  }
}

TEST_CASE("reindexing does not change the result") {
  std::mt19937_64 rng(5);
  for (const char* name : {"torus", "two_bump_symmetric", "annulus"}) {
    CAPTURE(name);
    auto l = load(name);
    const auto base = mesh_pipeline(l.mesh, l.values);
    std::vector<std::size_t> perm(l.mesh.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Mesh m2 = load_mesh(shuffle_off(l, perm));
    std::vector<Rational> v2(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) v2[perm[i]] = l.values[i];
    const auto again = mesh_pipeline(m2, v2);
    CHECK(again.reeb.vertex_count() == base.reeb.vertex_count());
    CHECK(again.reeb.edge_count() == base.reeb.edge_count());
    CHECK(again.report.c1 == base.report.c1);
    CHECK(bool(again.group) == bool(base.group));
    if (again.group && base.group) CHECK(*again.group == *base.group);
    if (again.enhanced && base.enhanced) {
      const auto& a = *again.enhanced;
      const auto& b = *base.enhanced;
      const auto ea = a.graph.incident(a.root).front();
      const auto eb = b.graph.incident(b.root).front();
      CHECK(canonical_code(a, ea, a.graph.other_end(ea, a.root)) ==
            canonical_code(b, eb, b.graph.other_end(eb, b.root)));
    }
  }
}

TEST_CASE("simple disk functions give two-exponent groups") {
  for (const char* name : {"two_bump_generic", "two_bump_symmetric"}) {
    auto l = load(name);
    const auto r = mesh_pipeline(l.mesh, l.values);
    REQUIRE(r.group);
    CHECK(is_simple_class(*r.group));
  }
}
