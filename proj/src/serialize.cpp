#include "tiltlab/serialize.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "tiltlab/errors.hpp"

namespace tiltlab {

Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) arrows.push_back({a.source, a.target});
  return Json{{"name", q.name()}, {"n", q.size()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw ValidationError("quiver JSON must be an object");
    const int n = j.at("n").get<int>();
    if (n < 1) throw ValidationError("empty vertex set");
    std::vector<std::pair<Vertex, Vertex>> arrows;
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 2) throw ValidationError("arrow must be a pair [s, t]");
      arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    return Quiver(n, arrows, j.value("name", std::string{}));
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("quiver JSON: ") + e.what());
  }
}

Quiver read_quiver(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos || text[first] != '{') return parse_quiver(text);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  return quiver_from_json(j);
}

Json to_json(const LMatrix& l) {
  Json rows = Json::array();
  for (Vertex i = 0; i < l.size(); ++i) rows.push_back(l.row(i));
  return Json{{"l", rows}, {"l_max", l_max(l)}};
}

Json to_json(const DimTable& t, const DimVectorTable& dims) {
  Json d = Json::array();
  for (const auto& v : dims.vectors) d.push_back(v);
  return Json{{"a", t.base}, {"n", t.n}, {"ext", t.ext}, {"hom", t.hom}, {"dims", d}};
}

Json to_json(const HasseGraph& g) {
  Json nodes = Json::array(), edges = Json::array(), truncated = Json::array();
  for (const auto& v : g.nodes) nodes.push_back(v.values());
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  for (const auto& [u, w] : g.truncated) truncated.push_back({{"from", u}, {"to", w.values()}});
  Json j{{"nodes", nodes}, {"edges", edges}, {"component", g.component}};
  j["component_vertex"] = g.component_vertex ? Json(*g.component_vertex) : Json(nullptr);
  j["truncated"] = truncated;
  return j;
}

Json to_json(const CubeSubquiver& k) {
  Json edges = Json::array();
  for (auto [u, v] : k.edges()) edges.push_back({u, v});
  return Json{{"dim", k.dim()}, {"nodes", k.nodes()}, {"edges", edges}};
}

CubeSubquiver cube_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw ValidationError("cube JSON must be an object");
    return CubeSubquiver(j.at("dim").get<int>(), j.at("nodes").get<std::vector<CubeNode>>());
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("cube JSON: ") + e.what());
  }
}

Json to_json(const DecompositionSeq& d) {
  Json pieces = Json::array();
  for (const auto& p : d.pieces) pieces.push_back({{"coords", p.coords}, {"cube", to_json(p.cube)}});
  return Json{{"dim", d.dim}, {"pieces", pieces}, {"glue", d.glue}};
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string quiver_to_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph " << quoted(q.name().empty() ? "Q" : q.name()) << " {\n";
  for (Vertex v = 0; v < q.size(); ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
  for (const auto& a : q.arrows()) os << "  v" << a.source << " -> v" << a.target << ";\n";
  os << "}\n";
  return os.str();
}

std::string hasse_to_dot(const HasseGraph& g) {
  std::ostringstream os;
  os << "digraph tilting {\n  rankdir=TB;\n  node [shape=box];\n";
  std::set<Shift> comps(g.component.begin(), g.component.end());
  for (Shift c : comps) {
    os << "  subgraph cluster_" << c << " {\n    label=\"r=" << c << "\";\n";
    for (std::size_t k = 0; k < g.nodes.size(); ++k)
      if (g.component[k] == c) os << "    n" << k << " [label=" << quoted(g.nodes[k].to_string()) << "];\n";
    os << "  }\n";
  }
  for (auto [u, v] : g.edges) {
    os << "  n" << u << " -> n" << v;
    if (g.component[u] != g.component[v]) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string cube_to_dot(const CubeSubquiver& k) {
  std::ostringstream os;
  os << "digraph cube {\n  node [shape=box];\n";
  for (std::size_t u = 0; u < k.nodes().size(); ++u)
    os << "  c" << u << " [label=" << quoted(to_string(k.nodes()[u])) << "];\n";
  for (auto [u, v] : k.edges()) os << "  c" << u << " -> c" << v << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

enum class Tok { id, lbrace, rbrace, lbracket, rbracket, semi, comma, eq, colon, edgeop, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
};

class DotParser {
 public:
  explicit DotParser(std::string_view s) : s_(s) { advance(); }

  DotSummary run() {
    if (is_keyword("strict")) advance();
    if (is_keyword("digraph"))
      sum_.directed = true;
    else if (!is_keyword("graph"))
      fail("expected 'graph' or 'digraph'");
    advance();
    if (tok_.kind == Tok::id) advance();
    expect(Tok::lbrace, "'{'");
    stmt_list();
    expect(Tok::rbrace, "'}'");
    if (tok_.kind != Tok::end) fail("trailing input after graph");
    sum_.nodes = ids_.size();
    return sum_;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(tok_.line, "DOT: " + msg); }

  bool is_keyword(const char* kw) const {
    if (tok_.kind != Tok::id || tok_.text.size() != std::char_traits<char>::length(kw)) return false;
    for (std::size_t i = 0; i < tok_.text.size(); ++i)
      if (std::tolower(static_cast<unsigned char>(tok_.text[i])) != kw[i]) return false;
    return true;
  }

  void expect(Tok k, const char* what) {
    if (tok_.kind != k) fail(std::string("expected ") + what);
    advance();
  }

  void advance() {
    skip_space();
    tok_.line = line_;
    tok_.text.clear();
    if (pos_ >= s_.size()) {
      tok_.kind = Tok::end;
      return;
    }
    const char c = s_[pos_];
    auto single = [&](Tok k) {
      tok_.kind = k;
      ++pos_;
    };
    switch (c) {
      case '{': return single(Tok::lbrace);
      case '}': return single(Tok::rbrace);
      case '[': return single(Tok::lbracket);
      case ']': return single(Tok::rbracket);
      case ';': return single(Tok::semi);
      case ',': return single(Tok::comma);
      case '=': return single(Tok::eq);
      case ':': return single(Tok::colon);
      default: break;
    }
    if (c == '-' && pos_ + 1 < s_.size() && (s_[pos_ + 1] == '>' || s_[pos_ + 1] == '-')) {
      if ((s_[pos_ + 1] == '>') != sum_.directed) fail("edge operator does not match graph kind");
      tok_.kind = Tok::edgeop;
      pos_ += 2;
      return;
    }
    if (c == '"') {
      ++pos_;
      while (pos_ < s_.size() && s_[pos_] != '"') {
        if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
        if (s_[pos_] == '\n') ++line_;
        tok_.text += s_[pos_++];
      }
      if (pos_ >= s_.size()) fail("unterminated string");
      ++pos_;
      tok_.kind = Tok::id;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        tok_.text += s_[pos_++];
      tok_.kind = Tok::id;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-') {
      if (c == '-') tok_.text += s_[pos_++];
      bool dot = false, digits = false;
      while (pos_ < s_.size()) {
        const char d = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(d))) {
          digits = true;
        } else if (d == '.' && !dot) {
          dot = true;
        } else {
          break;
        }
        tok_.text += s_[pos_++];
      }
      if (!digits) fail("malformed numeral");
      tok_.kind = Tok::id;
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  void skip_space() {
    for (;;) {
      while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        if (s_[pos_] == '\n') ++line_;
        ++pos_;
      }
      if (s_.substr(pos_, 2) == "//" || (pos_ < s_.size() && s_[pos_] == '#')) {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (s_.substr(pos_, 2) == "/*") {
        const auto end = s_.find("*/", pos_ + 2);
        if (end == std::string_view::npos) fail("unterminated comment");
        for (auto i = pos_; i < end; ++i)
          if (s_[i] == '\n') ++line_;
        pos_ = end + 2;
      } else {
        return;
      }
    }
  }

  void stmt_list() {
    while (tok_.kind != Tok::rbrace && tok_.kind != Tok::end) {
      stmt();
      if (tok_.kind == Tok::semi) advance();
    }
  }

  void attr_list() {
    while (tok_.kind == Tok::lbracket) {
      advance();
      while (tok_.kind == Tok::id) {
        advance();
        expect(Tok::eq, "'=' in attribute");
        if (tok_.kind != Tok::id) fail("expected attribute value");
        advance();
        if (tok_.kind == Tok::semi || tok_.kind == Tok::comma) advance();
      }
      expect(Tok::rbracket, "']'");
    }
  }

  // node_id or subgraph, as an edge operand.
  void operand() {
    if (tok_.kind == Tok::lbrace || is_keyword("subgraph")) {
      subgraph();
      return;
    }
    if (tok_.kind != Tok::id) fail("expected node id");
    ids_.insert(tok_.text);
    advance();
    if (tok_.kind == Tok::colon) {
      advance();
      if (tok_.kind != Tok::id) fail("expected port");
      advance();
      if (tok_.kind == Tok::colon) {
        advance();
        if (tok_.kind != Tok::id) fail("expected compass point");
        advance();
      }
    }
  }

  void subgraph() {
    if (is_keyword("subgraph")) {
      advance();
      if (tok_.kind == Tok::id) {
        if (tok_.text.rfind("cluster", 0) == 0) ++sum_.clusters;
        advance();
      }
    }
    expect(Tok::lbrace, "'{' opening subgraph");
    stmt_list();
    expect(Tok::rbrace, "'}' closing subgraph");
  }

  void stmt() {
    if (is_keyword("graph") || is_keyword("node") || is_keyword("edge")) {
      advance();
      if (tok_.kind != Tok::lbracket) fail("expected attribute list");
      attr_list();
      return;
    }
    if (tok_.kind == Tok::id && !is_keyword("subgraph")) {
      const std::string first = tok_.text;
      advance();
      if (tok_.kind == Tok::eq) {
        advance();
        if (tok_.kind != Tok::id) fail("expected value after '='");
        advance();
        return;
      }
      ids_.insert(first);
      if (tok_.kind == Tok::colon) {
        advance();
        if (tok_.kind != Tok::id) fail("expected port");
        advance();
      }
    } else {
      operand();
    }
    while (tok_.kind == Tok::edgeop) {
      ++sum_.edges;
      advance();
      operand();
    }
    attr_list();
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  Token tok_{Tok::end, {}, 1};
  DotSummary sum_;
  std::set<std::string> ids_;
};

}  // namespace

DotSummary validate_dot(std::string_view text) { return DotParser(text).run(); }

}  // namespace tiltlab
