#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "reebsym/cli.hpp"
#include "reebsym/error.hpp"
#include "reebsym/group.hpp"
#include "reebsym/mesh.hpp"
#include "reebsym/reeb.hpp"
#include "reebsym/symmetry.hpp"
#include "reebsym/tree_aut.hpp"
#include "reebsym/word.hpp"

namespace py = pybind11;
using namespace reebsym;

namespace {

py::int_ to_py(const BigInt& n) {
  return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(n.str().c_str(), nullptr, 10)));
}

std::vector<std::string> words(const std::vector<GroupExpr>& exprs) {
  std::vector<std::string> out;
  for (const auto& e : exprs) out.push_back(print_word(e));
  return out;
}

Tree tree_from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
  Tree t;
  for (const auto& [a, b] : edges) {
    const std::size_t ia = t.add_vertex(a);
    const std::size_t ib = t.add_vertex(b);
    t.add_edge(ia, ib);
  }
  if (edges.empty()) t.add_vertex("0");
  t.validate();
  return t;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Symmetry groups of Morse functions on surfaces";

  static py::exception<Error> error_type(m, "ReebsymError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type.ptr())(std::string(to_string(e.code())) + ": " + e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def("normalize_word", [](const std::string& w) { return print_word(normalize(parse_word(w))); });
  m.def("word_order", [](const std::string& w) { return to_py(expr_order(parse_word(w))); });
  m.def("is_simple_word", [](const std::string& w) { return is_simple_class(parse_word(w)); });
  m.def("enumerate_words", [](int max_wreaths) { return words(enumerate_exprs(max_wreaths)); },
        py::arg("max_wreaths"));
  m.def("random_words", [](int count, std::uint64_t seed, int max_nodes) {
    std::mt19937_64 rng(seed);
    std::vector<GroupExpr> out;
    for (int i = 0; i < count; ++i) out.push_back(random_expr(rng, max_nodes));
    return words(out);
  }, py::arg("count"), py::arg("seed") = 1, py::arg("max_nodes") = 10);

  m.def("group_of_reeb", [](const std::string& text) { return print_word(compute_group(parse_reeb(text))); },
        "Group word of a .reeb graph given as text");
  m.def("validate_reeb_text", [](const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& v : validate_reeb(parse_reeb(text)).violations) out.emplace_back(v.code, v.detail);
    return out;
  });
  m.def("realize_word", [](const std::string& w) { return write_reeb(realize_reeb(parse_word(w))); },
        "Realizing .reeb text for a word");
  m.def("round_trip", [](const std::string& w) { return round_trip_check(parse_word(w)); });
  m.def("reeb_to_dot", [](const std::string& text) { return to_dot(parse_reeb(text).graph); });

  m.def("aut_tree", [](const std::vector<std::pair<std::string, std::string>>& edges) {
    const SymExpr e = aut_tree(tree_from_edges(edges));
    return py::make_tuple(print_word(e), to_py(expr_order(e)));
  }, "Automorphism group word and order of a tree given by its edges");
  m.def("brute_force_aut_count", [](const std::vector<std::pair<std::string, std::string>>& edges) {
    return brute_force_aut_count(tree_from_edges(edges));
  });

  m.def("extract", [](const std::string& off, const std::string& vals, bool pipeline) {
    const Mesh mesh = load_mesh(off);
    const PipelineResult r = mesh_pipeline(mesh, load_values(vals, mesh), pipeline);
    py::dict d;
    d["c0"] = r.report.c0;
    d["c1"] = r.report.c1;
    d["c2"] = r.report.c2;
    d["chi"] = r.chi;
    d["boundary_count"] = r.boundary_count;
    d["morse_equality"] = r.morse_equality;
    d["reeb_vertices"] = r.reeb.vertex_count();
    d["reeb_edges"] = r.reeb.edge_count();
    d["reeb_betti"] = r.reeb_betti;
    d["betti_bound"] = r.betti_bound;
    d["generic"] = r.function_class.is_generic;
    d["simple"] = r.function_class.is_simple;
    d["group"] = r.group ? py::object(py::str(print_word(*r.group))) : py::object(py::none());
    d["skipped"] = r.skipped;
    d["dot"] = to_dot(r.reeb);
    return d;
  }, py::arg("off"), py::arg("values"), py::arg("pipeline") = true);

  m.def("member", [](const std::vector<std::int64_t>& base, const std::vector<std::int64_t>& top) {
    return wreath_membership(AbelianGroup::from_invariant_factors(base),
                             AbelianGroup::from_invariant_factors(top))
        .to_string();
  }, py::arg("base"), py::arg("top"));
  m.def("are_isomorphic_words", [](const std::string& a, const std::string& b, std::size_t cap) {
    return are_isomorphic(realize_concrete(parse_word(a), cap), realize_concrete(parse_word(b), cap), cap);
  }, py::arg("word1"), py::arg("word2"), py::arg("cap") = kDefaultEnumerationCap);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs the command line in-process; returns (exit code, stdout, stderr)");
}
