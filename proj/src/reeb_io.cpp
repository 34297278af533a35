#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "reebsym/error.hpp"
#include "reebsym/reeb.hpp"

namespace reebsym {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw Error(ErrorCode::Parse, "not a rational number: '" + std::string(text) + "'");
}

std::string strip_zeros(std::string_view s) {
  const auto first = s.find_first_not_of('0');
  return first == std::string_view::npos ? "0" : std::string(s.substr(first));
}

cpp_int pow10(long long e) {
  cpp_int r = 1;
  for (long long i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text);
    const cpp_int d{strip_zeros(den)};
    if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    Rational q{cpp_int(strip_zeros(num)), d};
    return negative ? Rational(-q) : q;
  }

  long long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
      exp_negative = exp[0] == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) bad_rational(text);
    exponent = std::stoll(std::string(exp));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad_rational(text);
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long long>(frac.size());
  } else {
    if (!all_digits(s)) bad_rational(text);
    digits = std::string(s);
  }
  // Leading zeros would make cpp_int read the digits as octal.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  Rational q{cpp_int(digits)};
  if (exponent > 0) q *= pow10(exponent);
  if (exponent < 0) q /= pow10(-exponent);
  return negative ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) {
  const cpp_int num = boost::multiprecision::numerator(q);
  const cpp_int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// ---------------------------------------------------------------------------
// .reeb

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

std::optional<VertexKind> vertex_kind_from(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "min") return VertexKind::Min;
  if (s == "max") return VertexKind::Max;
  if (s == "saddle") return VertexKind::Saddle;
  if (s == "boundary") return VertexKind::Boundary;
  return std::nullopt;
}

}  // namespace

EnhancedReebGraph parse_reeb(std::string_view text) {
  EnhancedReebGraph out;
  bool have_surface = false;
  std::optional<std::size_t> root;
  std::map<std::string, std::size_t> vertex_index;
  std::map<std::string, std::size_t> edge_index;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];

    auto need = [&](std::size_t n) {
      if (tok.size() != n) {
        parse_fail(line_no, kw + " expects " + std::to_string(n - 1) + " fields, got " +
                                std::to_string(tok.size() - 1));
      }
    };
    auto vertex_ref = [&](const std::string& id) {
      auto it = vertex_index.find(id);
      if (it == vertex_index.end()) parse_fail(line_no, "unknown vertex '" + id + "'");
      return it->second;
    };
    auto edge_ref = [&](const std::string& id) {
      auto it = edge_index.find(id);
      if (it == edge_index.end()) parse_fail(line_no, "unknown edge '" + id + "'");
      return it->second;
    };

    if (kw == "SURFACE") {
      need(2);
      if (have_surface) parse_fail(line_no, "duplicate SURFACE");
      if (tok[1] == "disk") {
        out.surface = SurfaceKind::Disk;
      } else if (tok[1] == "cylinder") {
        out.surface = SurfaceKind::Cylinder;
      } else {
        parse_fail(line_no, "unknown surface '" + tok[1] + "'");
      }
      have_surface = true;
    } else if (kw == "VERTEX") {
      need(5);
      if (vertex_index.count(tok[1])) parse_fail(line_no, "duplicate vertex id '" + tok[1] + "'");
      const auto kind = vertex_kind_from(tok[2]);
      if (!kind) parse_fail(line_no, "unknown vertex kind '" + tok[2] + "'");
      ReebVertex v;
      v.id = tok[1];
      v.kind = *kind;
      try {
        v.level = parse_rational(tok[3]);
      } catch (const Error& e) {
        parse_fail(line_no, e.what());
      }
      if (!all_digits(tok[4]) || tok[4].size() > 6) {
        parse_fail(line_no, "crit_points must be a non-negative integer");
      }
      v.crit_points = std::stoi(tok[4]);
      vertex_index[tok[1]] = out.graph.add_vertex(std::move(v));
    } else if (kw == "EDGE") {
      need(4);
      if (edge_index.count(tok[1])) parse_fail(line_no, "duplicate edge id '" + tok[1] + "'");
      const std::size_t a = vertex_ref(tok[2]);
      const std::size_t b = vertex_ref(tok[3]);
      edge_index[tok[1]] = out.graph.add_edge(tok[1], a, b);
    } else if (kw == "ATOM") {
      if (tok.size() < 2) parse_fail(line_no, "ATOM needs a vertex id");
      const std::size_t v = vertex_ref(tok[1]);
      if (out.atoms.count(v)) parse_fail(line_no, "duplicate ATOM for '" + tok[1] + "'");
      Atom atom;
      std::vector<std::size_t>* section = nullptr;
      bool seen_axial = false;
      bool seen_cyclic = false;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        if (tok[i] == "AXIAL") {
          if (seen_axial || seen_cyclic) parse_fail(line_no, "AXIAL must come first and once");
          seen_axial = true;
          section = &atom.axial;
        } else if (tok[i] == "CYCLIC") {
          if (seen_cyclic) parse_fail(line_no, "duplicate CYCLIC");
          seen_cyclic = true;
          section = &atom.cyclic;
        } else {
          if (!section) parse_fail(line_no, "edge id before AXIAL or CYCLIC");
          section->push_back(edge_ref(tok[i]));
        }
      }
      out.atoms.emplace(v, std::move(atom));
    } else if (kw == "ROOT") {
      need(2);
      if (root) parse_fail(line_no, "duplicate ROOT");
      root = vertex_ref(tok[1]);
    } else {
      parse_fail(line_no, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_surface) parse_fail(line_no, "missing SURFACE");
  if (!root) parse_fail(line_no, "missing ROOT");
  out.root = *root;
  return out;
}

std::string write_reeb(const EnhancedReebGraph& g) {
  std::ostringstream out;
  out << "SURFACE " << to_string(g.surface) << "\n";
  for (const auto& v : g.graph.vertices()) {
    out << "VERTEX " << v.id << " " << to_string(v.kind) << " " << format_rational(v.level) << " "
        << v.crit_points << "\n";
  }
  for (const auto& e : g.graph.edges()) {
    out << "EDGE " << e.id << " " << g.graph.vertex(e.a).id << " " << g.graph.vertex(e.b).id << "\n";
  }
  for (const auto& [v, atom] : g.atoms) {
    out << "ATOM " << g.graph.vertex(v).id << " AXIAL";
    for (std::size_t e : atom.axial) out << " " << g.graph.edge(e).id;
    out << " CYCLIC";
    for (std::size_t e : atom.cyclic) out << " " << g.graph.edge(e).id;
    out << "\n";
  }
  if (g.root < g.graph.vertex_count()) out << "ROOT " << g.graph.vertex(g.root).id << "\n";
  return out.str();
}

}  // namespace reebsym
