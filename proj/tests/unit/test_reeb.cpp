#include <doctest.h>

#include "../support.hpp"
#include "reebsym/error.hpp"
#include "reebsym/reeb.hpp"

using namespace reebsym;
using testsupport::slurp;

namespace {
CanonicalCode code_at_root(const EnhancedReebGraph& g) {
  return canonical_code(g, g.graph.incident(g.root).front(), g.graph.other_end(g.graph.incident(g.root).front(), g.root));
}

CanonicalCode code_of(const std::string& text) { return code_at_root(parse_reeb(text)); }

std::vector<CanonicalCode> codes(std::initializer_list<const char*> names) {
  std::vector<CanonicalCode> out;
  for (const char* n : names) out.push_back(CanonicalCode{n});
  return out;
}
}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("0.08") == Rational(2, 25));
  CHECK(parse_rational("-1.5e2") == Rational(-150));
  CHECK(parse_rational("007") == Rational(7));
  CHECK(format_rational(Rational(6, 4)) == "3/2");
  CHECK(format_rational(Rational(-4)) == "-4");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("validation examples") {
  CHECK(validate_reeb(parse_reeb(slurp("reeb/simple_01_single_edge.reeb"))).ok());
  CHECK(validate_reeb(parse_reeb(slurp("reeb/bad_flat_edge.reeb"))).has("non-monotone edge"));
  CHECK(validate_reeb(parse_reeb(slurp("reeb/bad_disk_cycle.reeb"))).has("Betti bound"));
  CHECK(validate_reeb(parse_reeb(slurp("reeb/simple_10_cylinder_cycle.reeb"))).ok());
  CHECK(validate_reeb(parse_reeb(slurp("reeb/flower_5.reeb"))).ok());
}

TEST_CASE("atom checks") {
  const std::string base = slurp("reeb/simple_02_equal_pair.reeb");
  auto missing = base;
  missing.replace(missing.find("ATOM s AXIAL e0 CYCLIC e1 e2"), 28, "");
  CHECK(validate_reeb(parse_reeb(missing)).has("atom missing"));
  auto incomplete = base;
  incomplete.replace(incomplete.find("CYCLIC e1 e2"), 12, "CYCLIC e1 e1");
  CHECK(validate_reeb(parse_reeb(incomplete)).has("atom incomplete"));
  auto wrong_root = base;
  wrong_root.replace(wrong_root.find("AXIAL e0 CYCLIC e1 e2"), 21, "AXIAL e1 CYCLIC e0 e2");
  CHECK(validate_reeb(parse_reeb(wrong_root)).has("root edge not axial"));
}

TEST_CASE("parse errors name the line") {
  try {
    parse_reeb("SURFACE disk\nVERTEX a boundary 0 0\nEDGE e0 a zz\nROOT a\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_reeb("SURFACE sphere\n"), Error);
}

TEST_CASE("write then parse keeps the graph") {
  const auto g = parse_reeb(slurp("reeb/simple_08_mixed.reeb"));
  const auto text = write_reeb(g);
  CHECK(write_reeb(parse_reeb(text)) == text);
  CHECK(code_at_root(parse_reeb(text)) == code_at_root(g));
}

TEST_CASE("function classes") {
  auto fc = classify_function(parse_reeb(slurp("reeb/simple_01_single_edge.reeb")));
  CHECK(fc.c0 == 0);
  CHECK(fc.c1 == 0);
  CHECK(fc.c2 == 1);
  CHECK(fc.is_generic);
  fc = classify_function(parse_reeb(slurp("reeb/simple_02_equal_pair.reeb")));
  CHECK(fc.is_simple);
  CHECK_FALSE(fc.is_generic);
  fc = classify_function(parse_reeb(slurp("reeb/simple_03_unequal_pair.reeb")));
  CHECK(fc.is_generic);
  auto four = slurp("reeb/flower_5.reeb");
  CHECK_FALSE(classify_function(parse_reeb(four)).is_simple);
}

TEST_CASE("Morse equality") {
  CHECK(morse_equality_check(0, 0, 1, SurfaceKind::Disk));
  CHECK(morse_equality_check(0, 0, 0, SurfaceKind::Cylinder));
  CHECK(morse_equality_check(0, 1, 2, SurfaceKind::Disk));
  CHECK_FALSE(morse_equality_check(0, 1, 1, SurfaceKind::Disk));
  CHECK(morse_equality_check(1, 2, 1, 0));
}

TEST_CASE("canonical codes") {
  const auto leaf5 = "SURFACE disk\nVERTEX b boundary 0 0\nVERTEX m max 5 1\nEDGE e0 b m\nROOT b\n";
  const auto leaf5b = "SURFACE disk\nVERTEX r boundary 0 0\nVERTEX x max 5 1\nEDGE q r x\nROOT r\n";
  const auto leaf7 = "SURFACE disk\nVERTEX b boundary 0 0\nVERTEX m max 7 1\nEDGE e0 b m\nROOT b\n";
  CHECK(code_of(leaf5) == code_of(leaf5b));
  CHECK_FALSE(code_of(leaf5) == code_of(leaf7));

  // Rotating the cyclic slot list of a saddle does not change its code.
  const auto flower = slurp("reeb/flower_6_period_3.reeb");
  auto rotated = flower;
  rotated.replace(rotated.find("CYCLIC e2 e3 e4 e5 e6 e7"), 24, "CYCLIC e5 e6 e7 e2 e3 e4");
  CHECK(code_of(flower) == code_of(rotated));
  auto mirrored = flower;
  mirrored.replace(mirrored.find("VERTEX p2 max 3 1"), 17, "VERTEX p2 max 4 1");
  CHECK_FALSE(code_of(flower) == code_of(mirrored));
}

TEST_CASE("cyclic symmetry of slot words") {
  auto s = cyclic_symmetry(codes({"a", "a", "a", "a", "a"}));
  CHECK(s.m == 5);
  CHECK(s.orbits.size() == 1);
  s = cyclic_symmetry(codes({"a", "b"}));
  CHECK(s.m == 1);
  CHECK(s.orbits.size() == 2);
  s = cyclic_symmetry(codes({"a", "b", "a", "b"}));
  CHECK(s.m == 2);
  CHECK(s.orbits == std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}});
}

TEST_CASE("dot export") {
  const auto dot = to_dot(parse_reeb(slurp("reeb/simple_01_single_edge.reeb")).graph);
  CHECK(dot.rfind("digraph reeb {", 0) == 0);
  CHECK(dot.find("->") != std::string::npos);
  CHECK(dot.back() == '\n');
  const auto fig = to_dot(parse_reeb(slurp("reeb/simple_02_equal_pair.reeb")).graph);
  std::size_t arrows = 0;
  for (std::size_t p = fig.find("->"); p != std::string::npos; p = fig.find("->", p + 2)) ++arrows;
  CHECK(arrows == 3);
}
