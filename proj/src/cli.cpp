#include "reebsym/cli.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "reebsym/error.hpp"
#include "reebsym/group.hpp"
#include "reebsym/mesh.hpp"
#include "reebsym/reeb.hpp"
#include "reebsym/symmetry.hpp"
#include "reebsym/tree_aut.hpp"
#include "reebsym/word.hpp"

namespace reebsym {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

std::vector<std::int64_t> parse_factor_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(ErrorCode::InvalidArgument, "bad invariant factor '" + item + "' in '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

// Prints one line per expression; returns the number of failures.
int report_round_trips(const std::vector<GroupExpr>& exprs, std::ostream& out) {
  int failures = 0;
  for (const auto& e : exprs) {
    const RoundTripResult r = round_trip(e);
    if (r.ok) {
      out << "OK " << print_word(r.expected) << "\n";
    } else {
      ++failures;
      out << "FAIL " << print_word(r.expected) << ": " << r.detail << "\n";
    }
  }
  if (exprs.size() > 1) {
    out << "summary ok=" << exprs.size() - static_cast<std::size_t>(failures)
        << " fail=" << failures << "\n";
  }
  return failures;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetry groups of Morse functions on surfaces"};
  app.name("reebsym");
  app.require_subcommand(1);
  std::size_t cap = kDefaultEnumerationCap;
  app.add_option("--cap", cap, "Enumeration cap for concrete groups");

  // word
  auto* word = app.add_subcommand("word", "Normalize, measure or classify an admissible word");
  std::string word_action;
  std::string word_text;
  word->add_option("action", word_action, "normalize | order | simple")
      ->required()
      ->check(CLI::IsMember({"normalize", "order", "simple"}));
  word->add_option("word", word_text, "Admissible word")->required();

  // group-of
  auto* group_of = app.add_subcommand("group-of", "Group of a .reeb graph");
  std::string reeb_path;
  std::string dot_path;
  group_of->add_option("file", reeb_path, ".reeb file")->required();
  group_of->add_option("--dot", dot_path, "Write the graph as DOT");

  // realize
  auto* realize = app.add_subcommand("realize", "Build a .reeb graph realizing a word");
  std::string realize_word;
  std::string realize_out;
  realize->add_option("word", realize_word, "Admissible word")->required();
  realize->add_option("-o,--output", realize_out, "Output .reeb file (default stdout)");

  // roundtrip
  auto* roundtrip = app.add_subcommand("roundtrip", "Check group(realize(w)) == normalize(w)");
  std::string rt_word;
  int exhaustive = -1;
  int random_count = 0;
  std::uint64_t seed = 1;
  int max_nodes = 10;
  roundtrip->add_option("word", rt_word, "Admissible word");
  roundtrip->add_option("--exhaustive", exhaustive, "All words with at most this many wreaths")
      ->check(CLI::Range(0, 4));
  roundtrip->add_option("--random", random_count, "Number of random words")->check(CLI::NonNegativeNumber);
  roundtrip->add_option("--seed", seed, "Seed for --random");
  roundtrip->add_option("--max-nodes", max_nodes, "Node bound for --random")->check(CLI::Range(1, 12));

  // aut-tree
  auto* aut = app.add_subcommand("aut-tree", "Automorphism group of a tree");
  std::string tree_path;
  aut->add_option("file", tree_path, "Edge list file")->required();

  // extract
  auto* extract = app.add_subcommand("extract", "Critical points and Reeb graph of a mesh function");
  std::string off_path;
  std::string vals_path;
  bool pipeline = false;
  std::string extract_dot;
  std::string extract_reeb_out;
  extract->add_option("mesh", off_path, "OFF mesh")->required();
  extract->add_option("values", vals_path, "Values, one per vertex")->required();
  extract->add_flag("--pipeline", pipeline, "Also compute the group");
  extract->add_option("--dot", extract_dot, "Write the Reeb graph as DOT");
  extract->add_option("--reeb", extract_reeb_out, "Write the enhanced graph (with --pipeline)");

  // member
  auto* member = app.add_subcommand("member", "Membership of base wr top in the realizable family");
  std::string base_text;
  std::string top_text;
  member->add_option("base", base_text, "Invariant factors, comma separated")->required();
  member->add_option("top", top_text, "Invariant factors, comma separated")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force oracles");
  oracle->require_subcommand(1);
  auto* iso = oracle->add_subcommand("iso", "Are two words isomorphic as groups");
  std::string iso_a;
  std::string iso_b;
  iso->add_option("word1", iso_a)->required();
  iso->add_option("word2", iso_b)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*word) {
      const GroupExpr e = parse_word(word_text);
      if (word_action == "normalize") {
        out << print_word(normalize(e)) << "\n";
      } else if (word_action == "order") {
        out << expr_order(e).str() << "\n";
      } else {
        out << (is_simple_class(e) ? "true" : "false") << "\n";
      }
    } else if (*group_of) {
      const EnhancedReebGraph g = parse_reeb(read_file(reeb_path));
      const GroupExpr e = compute_group(g);
      if (!dot_path.empty()) write_file(dot_path, to_dot(g.graph));
      out << print_word(e) << "\n";
    } else if (*realize) {
      const std::string text = write_reeb(realize_reeb(parse_word(realize_word)));
      if (realize_out.empty()) {
        out << text;
      } else {
        write_file(realize_out, text);
      }
    } else if (*roundtrip) {
      std::vector<GroupExpr> exprs;
      if (!rt_word.empty()) exprs.push_back(parse_word(rt_word));
      if (exhaustive >= 0) {
        const auto all = enumerate_exprs(exhaustive);
        exprs.insert(exprs.end(), all.begin(), all.end());
      }
      std::mt19937_64 rng(seed);
      for (int i = 0; i < random_count; ++i) exprs.push_back(random_expr(rng, max_nodes));
      if (exprs.empty()) {
        err << "roundtrip needs a word, --exhaustive or --random\n";
        return 2;
      }
      if (report_round_trips(exprs, out) > 0) return 1;
    } else if (*aut) {
      const SymExpr e = aut_tree(parse_tree(read_file(tree_path)));
      out << print_word(e) << "\n" << "order " << expr_order(e).str() << "\n";
    } else if (*extract) {
      const Mesh mesh = load_mesh(read_file(off_path));
      const auto values = load_values(read_file(vals_path), mesh);
      const PipelineResult r = mesh_pipeline(mesh, values, pipeline);
      if (!extract_dot.empty()) write_file(extract_dot, to_dot(r.reeb));
      if (!extract_reeb_out.empty() && r.enhanced) write_file(extract_reeb_out, write_reeb(*r.enhanced));
      out << format_pipeline(r, pipeline);
    } else if (*member) {
      const auto base = AbelianGroup::from_invariant_factors(parse_factor_list(base_text));
      const auto top = AbelianGroup::from_invariant_factors(parse_factor_list(top_text));
      out << wreath_membership(base, top).to_string() << "\n";
    } else if (*iso) {
      const bool same = are_isomorphic(realize_concrete(parse_word(iso_a), cap),
                                       realize_concrete(parse_word(iso_b), cap), cap);
      out << (same ? "true" : "false") << "\n";
    }
  } catch (const Error& e) {
    err << "ERROR " << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace reebsym
