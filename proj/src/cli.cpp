#include "tiltlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "tiltlab/ar_oracle.hpp"
#include "tiltlab/errors.hpp"
#include "tiltlab/ext_metric.hpp"
#include "tiltlab/quiver.hpp"
#include "tiltlab/serialize.hpp"
#include "tiltlab/structure_maps.hpp"
#include "tiltlab/tilting_poset.hpp"

namespace tiltlab::cli {

namespace {

const char* kSchemas = R"(JSON shapes (--format json):
  quiver         {"name": str, "n": int, "arrows": [[s, t], ...]}
  l-matrix       {"l": [[int]], "l_max": int}
  ext            {"from": [i, r], "to": [j, s], "ext": int, "hom": int, "criterion": bool}
  oracle-check   {"max_shift": int, "checks": {name: bool}, "passed": bool}
  enumerate-lk   {"vertex": int, "shift": int, "nodes": [[int]]}
  hasse/window   {"nodes": [[int]], "edges": [[u, v]], "component": [int],
                  "component_vertex": int|null, "truncated": [{"from": u, "to": [int]}]}
  cube           {"dim": int, "nodes": [[0|1]], "edges": [[u, v]]}
  decompose      {"dim": int, "pieces": [{"coords": [int], "cube": cube}], "glue": [int]}
Quiver input may be the line format or the quiver JSON above.
Exit codes: 0 ok, 2 invalid input, 3 precondition, 4 overflow, 5 internal check.
Environment: TILTLAB_COLOR=never|auto.)";

struct Config {
  std::vector<std::string> inputs;
  std::vector<std::int64_t> indices;
  Shift max_shift = 3;
  std::string format = "text";
  std::string mode = "corrected";
  std::string verify = "fast";
  std::uint64_t seed = 1729;
  std::optional<int> vertex;
  Shift shift = 0;
  bool single = false;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool color;
  Config cfg;

  std::string status(bool ok) const {
    if (!color) return ok ? "PASS" : "FAIL";
    return ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
  }
  bool json() const { return cfg.format == "json"; }
  bool dot() const { return cfg.format == "dot"; }
  bool oracle() const { return cfg.verify == "oracle"; }
};

const char* yes(bool b) { return b ? "yes" : "no"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Quiver load(const std::string& path) { return read_quiver(read_file(path)); }

bool is_cube_json(const std::string& text, Json* parsed) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') return false;
  try {
    *parsed = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  return parsed->is_object() && parsed->contains("dim");
}

AmalgamMode amalgam_mode(const Config& c) {
  return c.mode == "literal" ? AmalgamMode::literal : AmalgamMode::corrected;
}

void require_format(const Context& ctx, bool dot_ok) {
  if (ctx.dot() && !dot_ok) throw ValidationError("--format dot is not available for this subcommand");
}

Vertex pick_vertex(const Context& ctx, const Quiver& q) {
  if (ctx.cfg.vertex) {
    if (*ctx.cfg.vertex < 0 || *ctx.cfg.vertex >= q.size()) throw ValidationError("vertex out of range");
    return *ctx.cfg.vertex;
  }
  const auto src = q.sources();
  if (src.size() != 1) throw PreconditionError("condition (a) fails: pass --vertex explicitly");
  return src.front();
}

void emit_quiver(Context& ctx, const Quiver& q) {
  if (ctx.json())
    ctx.out << to_json(q).dump(2) << "\n";
  else if (ctx.dot())
    ctx.out << quiver_to_dot(q);
  else
    ctx.out << format_quiver(q);
}

void emit_hasse(Context& ctx, const HasseGraph& g) {
  if (ctx.json()) {
    ctx.out << to_json(g).dump(2) << "\n";
    return;
  }
  if (ctx.dot()) {
    ctx.out << hasse_to_dot(g);
    return;
  }
  ctx.out << "nodes: " << g.nodes.size() << "\n";
  for (std::size_t k = 0; k < g.nodes.size(); ++k)
    ctx.out << "  " << k << " " << g.nodes[k].to_string() << " component " << g.component[k] << "\n";
  ctx.out << "edges: " << g.edges.size() << "\n";
  for (auto [u, v] : g.edges)
    ctx.out << "  " << g.nodes[u].to_string() << " -> " << g.nodes[v].to_string() << "\n";
  ctx.out << "truncated: " << g.truncated.size() << "\n";
  for (const auto& [u, w] : g.truncated)
    ctx.out << "  " << g.nodes[u].to_string() << " -> " << w.to_string() << "\n";
}

void emit_cube(Context& ctx, const CubeSubquiver& k) {
  if (ctx.json()) {
    ctx.out << to_json(k).dump(2) << "\n";
    return;
  }
  if (ctx.dot()) {
    ctx.out << cube_to_dot(k);
    return;
  }
  const auto m = is_in_script_L(k);
  ctx.out << "dim: " << k.dim() << "\nnodes: " << k.nodes().size() << "\n";
  for (const auto& v : k.nodes()) ctx.out << "  " << to_string(v) << "\n";
  ctx.out << "edges: " << k.edges().size() << "\n";
  for (auto [u, v] : k.edges())
    ctx.out << "  " << to_string(k.nodes()[u]) << " -> " << to_string(k.nodes()[v]) << "\n";
  ctx.out << "in L: " << yes(m.member);
  if (!m.member) ctx.out << " (fails " << describe(m.failed) << ")";
  ctx.out << "\n";
}

int cmd_validate(Context& ctx) {
  require_format(ctx, false);
  const Quiver q = load(ctx.cfg.inputs[0]);
  const auto nr = normalize(q);
  const auto f = classify(q);
  std::optional<int> lmax;
  if (f.connected) lmax = l_max(l_matrix(q));
  if (ctx.json()) {
    Json j{{"name", q.name()},          {"n", q.size()},
           {"arrows", q.arrow_count()}, {"normalized", q.is_normalized()},
           {"connected", f.connected},  {"unique_source", f.unique_source},
           {"min_degree_ok", f.min_degree_ok}, {"unique_sink", f.unique_sink},
           {"l_le_1", f.l_le_1},        {"in_A_circ", f.in_A_circ},
           {"in_S", f.in_S}};
    j["l_max"] = lmax ? Json(*lmax) : Json(nullptr);
    j["normalization"] = nr.permutation;
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << "quiver " << (q.name().empty() ? "-" : q.name()) << ": " << q.size() << " vertices, "
            << q.arrow_count() << " arrows\n";
    ctx.out << "normalized: " << yes(q.is_normalized()) << "\n";
    if (!q.is_normalized()) {
      ctx.out << "normalization:";
      for (Vertex v = 0; v < q.size(); ++v) ctx.out << " " << v << "->" << nr.permutation[v];
      ctx.out << "\n";
    }
    ctx.out << "connected: " << yes(f.connected) << "\n";
    ctx.out << "unique source: " << yes(f.unique_source) << "\n";
    ctx.out << "min degree >= 2: " << yes(f.min_degree_ok) << "\n";
    ctx.out << "unique sink: " << yes(f.unique_sink) << "\n";
    if (lmax) ctx.out << "l_max: " << *lmax << "\n";
    ctx.out << "in A°: " << yes(f.in_A_circ) << "\nin S: " << yes(f.in_S) << "\n";
  }
  if (!f.connected) throw ValidationError("quiver is disconnected");
  if (!f.unique_source)
    throw PreconditionError("condition (a) fails: " + std::to_string(q.sources().size()) + " sources");
  if (auto bad = min_degree_violation(q))
    throw PreconditionError("condition (b) fails at vertex " + std::to_string(*bad));
  return 0;
}

int cmd_l_matrix(Context& ctx) {
  require_format(ctx, false);
  const LMatrix l = l_matrix(load(ctx.cfg.inputs[0]));
  if (ctx.json()) {
    ctx.out << to_json(l).dump(2) << "\n";
    return 0;
  }
  for (Vertex i = 0; i < l.size(); ++i) {
    for (Vertex j = 0; j < l.size(); ++j) ctx.out << (j ? " " : "") << l(i, j);
    ctx.out << "\n";
  }
  ctx.out << "l_max: " << l_max(l) << "\n";
  return 0;
}

int cmd_ext(Context& ctx) {
  require_format(ctx, false);
  if (ctx.cfg.indices.size() != 4) throw ValidationError("ext needs four integers: i r j s");
  const Quiver q = load(ctx.cfg.inputs[0]);
  const auto& ix = ctx.cfg.indices;
  for (int k : {0, 2})
    if (ix[k] < 0 || ix[k] >= q.size()) throw ValidationError("vertex out of range");
  for (int k : {1, 3})
    if (ix[k] < 0) throw ValidationError("negative shift");
  const PreprojIndex a{static_cast<Vertex>(ix[0]), ix[1]}, b{static_cast<Vertex>(ix[2]), ix[3]};
  const auto nr = normalize(q);
  const PreprojIndex na{nr.permutation[a.vertex], a.shift}, nb{nr.permutation[b.vertex], b.shift};
  const bool vanishes = ext_vanishes(l_matrix(q), a, b);
  const auto ext = ext_dim(nr.quiver, na, nb);
  const auto hom = hom_dim(nr.quiver, na, nb);
  const bool agree = vanishes == (ext == 0);
  if (ctx.json()) {
    ctx.out << Json{{"from", {a.vertex, a.shift}}, {"to", {b.vertex, b.shift}}, {"ext", ext},
                    {"hom", hom}, {"criterion", vanishes}}
                   .dump(2)
            << "\n";
  } else {
    ctx.out << "dim Ext^1 = " << ext << "\ndim Hom = " << hom << "\n";
    ctx.out << "criterion: " << (vanishes ? "vanishes" : "nonvanishing") << "\n";
    ctx.out << "criterion==oracle: " << ctx.status(agree) << "\n";
  }
  if (!agree) throw InternalError("Ext criterion disagrees with the knitted dimension");
  return 0;
}

int cmd_oracle_check(Context& ctx) {
  require_format(ctx, false);
  const auto nr = normalize(load(ctx.cfg.inputs[0]));
  const auto rep = check_consistency(nr.quiver, ctx.cfg.max_shift);
  const std::vector<std::pair<const char*, bool>> checks{
      {"base cases", rep.base_cases}, {"monotonicity", rep.monotone}, {"euler form", rep.euler},
      {"ar duality", rep.duality},    {"criterion==oracle", rep.criterion}, {"coxeter", rep.coxeter}};
  if (ctx.json()) {
    Json c = Json::object();
    for (auto [name, ok] : checks) c[name] = ok;
    ctx.out << Json{{"max_shift", ctx.cfg.max_shift}, {"checks", c}, {"passed", rep.passed()}}.dump(2) << "\n";
  } else {
    for (auto [name, ok] : checks) ctx.out << name << ": " << ctx.status(ok) << "\n";
    if (rep.first_failure) ctx.out << "first failure: " << *rep.first_failure << "\n";
  }
  if (!rep.passed()) throw InternalError("oracle check failed: " + rep.first_failure.value_or("?"));
  return 0;
}

int cmd_enumerate_lk(Context& ctx) {
  require_format(ctx, false);
  const Quiver q = load(ctx.cfg.inputs[0]);
  const Vertex v = pick_vertex(ctx, q);
  const auto nodes = enumerate_lk(l_matrix(q), v, ctx.cfg.shift);
  if (ctx.json()) {
    Json arr = Json::array();
    for (const auto& x : nodes) arr.push_back(x.values());
    ctx.out << Json{{"vertex", v}, {"shift", ctx.cfg.shift}, {"nodes", arr}}.dump(2) << "\n";
    return 0;
  }
  for (const auto& x : nodes) ctx.out << x.to_string() << "\n";
  ctx.out << "count: " << nodes.size() << "\n";
  return 0;
}

int cmd_hasse(Context& ctx) {
  const Quiver q = load(ctx.cfg.inputs[0]);
  const Vertex v = pick_vertex(ctx, q);
  const LMatrix l = l_matrix(q);
  emit_hasse(ctx, hasse_edges(l, enumerate_lk(l, v, ctx.cfg.shift), v, ctx.oracle()));
  return 0;
}

int cmd_tp_window(Context& ctx) {
  emit_hasse(ctx, tp_window(load(ctx.cfg.inputs[0]), ctx.cfg.max_shift, ctx.oracle()));
  return 0;
}

int cmd_verify_theorem(Context& ctx) {
  require_format(ctx, false);
  const auto rep = verify_theorem_t(load(ctx.cfg.inputs[0]), ctx.cfg.max_shift);
  if (ctx.json()) {
    Json arr = Json::array();
    for (const auto& a : rep.assertions)
      arr.push_back({{"id", a.id}, {"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
    ctx.out << Json{{"max_shift", ctx.cfg.max_shift}, {"assertions", arr}, {"passed", rep.passed()}}.dump(2)
            << "\n";
  } else {
    for (const auto& a : rep.assertions) {
      ctx.out << "(" << a.id << ") " << a.name << ": " << ctx.status(a.passed);
      if (!a.passed) ctx.out << " [" << a.detail << "]";
      ctx.out << "\n";
    }
  }
  if (!rep.passed()) throw InternalError("structural assertion failed");
  return 0;
}

int cmd_ideals(Context& ctx) {
  require_format(ctx, false);
  const auto rep = order_ideals(load(ctx.cfg.inputs[0]));
  if (ctx.json()) {
    Json arr = Json::array();
    for (std::size_t k = 0; k < rep.ideals.size(); ++k)
      arr.push_back({{"ideal", rep.ideals[k]}, {"vector", rep.vectors[k].values()}});
    ctx.out << Json{{"source", rep.source},
                    {"ideals", arr},
                    {"matches_enumeration", rep.matches_enumeration},
                    {"order_isomorphic", rep.order_isomorphic}}
                   .dump(2)
            << "\n";
  } else {
    for (std::size_t k = 0; k < rep.ideals.size(); ++k) {
      ctx.out << "{";
      for (std::size_t t = 0; t < rep.ideals[k].size(); ++t) ctx.out << (t ? "," : "") << rep.ideals[k][t];
      ctx.out << "} -> " << rep.vectors[k].to_string() << "\n";
    }
    ctx.out << "count: " << rep.ideals.size() << "\n";
    ctx.out << "matches enumeration: " << ctx.status(rep.matches_enumeration) << "\n";
    ctx.out << "order isomorphism: " << ctx.status(rep.order_isomorphic) << "\n";
  }
  if (!rep.matches_enumeration || !rep.order_isomorphic)
    throw InternalError("order ideals do not match the component");
  return 0;
}

int cmd_psi(Context& ctx) {
  emit_cube(ctx, psi(load(ctx.cfg.inputs[0])));
  return 0;
}

int cmd_psi_inverse(Context& ctx) {
  const std::string text = read_file(ctx.cfg.inputs[0]);
  Json j;
  if (!is_cube_json(text, &j)) throw ValidationError("psi-inverse expects cube JSON with a \"dim\" field");
  emit_quiver(ctx, psi_inverse(cube_from_json(j)));
  return 0;
}

int cmd_normal_form(Context& ctx) {
  const Quiver q = load(ctx.cfg.inputs[0]);
  const Quiver nf = normal_form(q);
  if (ctx.oracle()) {
    std::mt19937_64 rng(ctx.cfg.seed);
    for (int k = 0; k < 20; ++k)
      if (!labeled_equal(random_normal_form(q, rng), nf))
        throw InternalError("reduction order changed the normal form");
  }
  emit_quiver(ctx, nf);
  return 0;
}

int cmd_equivalent(Context& ctx) {
  require_format(ctx, false);
  if (ctx.cfg.inputs.size() != 2) throw ValidationError("equivalent needs two quiver files");
  const auto e = equivalent(load(ctx.cfg.inputs[0]), load(ctx.cfg.inputs[1]));
  if (ctx.json()) {
    ctx.out << Json{{"equivalent", e.equivalent}, {"labeled", e.labeled}}.dump(2) << "\n";
  } else {
    ctx.out << "equivalent: " << yes(e.equivalent) << "\n";
    ctx.out << "comparison: " << (e.labeled ? "labeled" : "isomorphism") << "\n";
  }
  return 0;
}

int cmd_decompose(Context& ctx) {
  require_format(ctx, false);
  const std::string text = read_file(ctx.cfg.inputs[0]);
  Json j;
  const CubeSubquiver k = is_cube_json(text, &j) ? cube_from_json(j) : psi(read_quiver(text));
  const auto seq = decompose(k, !ctx.cfg.single);
  const bool round_trip = recompose(seq) == k;
  if (ctx.json()) {
    ctx.out << to_json(seq).dump(2) << "\n";
  } else {
    ctx.out << "pieces: " << seq.pieces.size() << "\n";
    for (std::size_t t = 0; t < seq.pieces.size(); ++t) {
      const auto& p = seq.pieces[t];
      ctx.out << "  piece " << t << ": dim " << p.cube.dim() << ", " << p.cube.nodes().size()
              << " nodes, coords {";
      for (std::size_t c = 0; c < p.coords.size(); ++c) ctx.out << (c ? "," : "") << p.coords[c];
      ctx.out << "}";
      if (t < seq.glue.size()) ctx.out << ", glue " << seq.glue[t];
      ctx.out << "\n";
    }
    ctx.out << "recompose: " << ctx.status(round_trip) << "\n";
  }
  if (!round_trip) throw InternalError("recomposed pieces differ from the input");
  return 0;
}

int cmd_commute(Context& ctx) {
  require_format(ctx, false);
  if (ctx.cfg.inputs.size() != 2) throw ValidationError("commute needs two quiver files");
  const auto rep = verify_commute(load(ctx.cfg.inputs[0]), load(ctx.cfg.inputs[1]), amalgam_mode(ctx.cfg));
  if (ctx.json()) {
    ctx.out << Json{{"lhs", to_json(rep.lhs)}, {"rhs", to_json(rep.rhs)}, {"equal", rep.equal}}.dump(2) << "\n";
  } else {
    ctx.out << "psi(phi(q1,q2)): " << rep.lhs.nodes().size() << " nodes in C^" << rep.lhs.dim() << "\n";
    ctx.out << "psi(q2) amalgam psi(q1): " << rep.rhs.nodes().size() << " nodes in C^" << rep.rhs.dim() << "\n";
    ctx.out << "commute: " << ctx.status(rep.equal) << "\n";
  }
  if (!rep.equal) throw InternalError("commutative diagram fails");
  return 0;
}

int cmd_same_tp(Context& ctx) {
  require_format(ctx, false);
  if (ctx.cfg.inputs.size() != 2) throw ValidationError("same-tp needs two quiver files");
  const auto rep = same_tp(load(ctx.cfg.inputs[0]), load(ctx.cfg.inputs[1]), ctx.oracle(), ctx.cfg.max_shift);
  if (ctx.json()) {
    Json j{{"same", rep.same}, {"pieces", {rep.pieces1, rep.pieces2}}, {"period", rep.period}};
    j["windows_isomorphic"] = rep.windows_isomorphic ? Json(*rep.windows_isomorphic) : Json(nullptr);
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << "same: " << yes(rep.same) << "\n";
    ctx.out << "pieces: " << rep.pieces1 << " and " << rep.pieces2 << ", period " << rep.period << "\n";
    if (rep.windows_isomorphic) ctx.out << "windows isomorphic: " << yes(*rep.windows_isomorphic) << "\n";
  }
  return 0;
}

int cmd_export_dot(Context& ctx) {
  ctx.out << quiver_to_dot(load(ctx.cfg.inputs[0]));
  return 0;
}

struct Command {
  const char* name;
  const char* help;
  int inputs;  // 1 or 2
  int (*handler)(Context&);
};

const Command kCommands[] = {
    {"validate", "Parse a quiver and check conditions (a) and (b)", 1, cmd_validate},
    {"l-matrix", "Print the Ext-vanishing metric l(i, j)", 1, cmd_l_matrix},
    {"ext", "dim Ext^1 and Hom between two preprojectives: FILE i r j s", 1, cmd_ext},
    {"oracle-check", "Cross-check the criterion against knitted dimensions", 1, cmd_oracle_check},
    {"enumerate-lk", "List the component with a fixed shift at one vertex", 1, cmd_enumerate_lk},
    {"hasse", "Hasse edges of one component", 1, cmd_hasse},
    {"tp-window", "All components with source shift <= --max-shift", 1, cmd_tp_window},
    {"verify-theorem", "Check the six structural assertions on a window", 1, cmd_verify_theorem},
    {"ideals", "Order ideals and their shift vectors", 1, cmd_ideals},
    {"psi", "Source component as a cube subquiver", 1, cmd_psi},
    {"psi-inverse", "Quiver of a cube subquiver given as JSON", 1, cmd_psi_inverse},
    {"normal-form", "Reduce to the irreducible normal form", 1, cmd_normal_form},
    {"equivalent", "Compare normal forms of two quivers", 2, cmd_equivalent},
    {"decompose", "Split a cube subquiver (or psi of a quiver) into amalgam pieces", 1, cmd_decompose},
    {"commute", "Check psi(phi(q1,q2)) = psi(q2) amalgam psi(q1)", 2, cmd_commute},
    {"same-tp", "Decide whether two quivers have the same tilting quiver", 2, cmd_same_tp},
    {"export-dot", "Quiver as a DOT digraph", 1, cmd_export_dot},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool out_is_tty) {
  bool color = false;
  if (const char* env = std::getenv("TILTLAB_COLOR")) {
    const std::string v = env;
    if (v != "never" && v != "auto") {
      err << "error: TILTLAB_COLOR must be 'never' or 'auto'\n";
      return static_cast<int>(ExitCode::invalid_input);
    }
    color = v == "auto" && out_is_tty;
  } else {
    color = out_is_tty;
  }

  Context ctx{out, err, color, {}};
  CLI::App app{"Preprojective tilting quivers of path algebras", "tiltlab"};
  app.footer(kSchemas);
  app.require_subcommand(1);
  const Command* chosen = nullptr;
  std::string single_input;

  for (const auto& c : kCommands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    auto& cfg = ctx.cfg;
    if (c.inputs == 2) {
      sub->add_option("files", cfg.inputs, "two quiver files")->required()->expected(2);
    } else {
      sub->add_option("file", single_input, "input file")->required();
    }
    if (std::string(c.name) == "ext")
      sub->add_option("indices", cfg.indices, "i r j s")->required()->expected(4);
    sub->add_option("--max-shift,-R", cfg.max_shift, "shift bound R")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", cfg.format, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--mode", cfg.mode, "amalgam reading: corrected or literal")
        ->check(CLI::IsMember({"corrected", "literal"}));
    sub->add_option("--verify", cfg.verify, "fast or oracle")->check(CLI::IsMember({"fast", "oracle"}));
    sub->add_option("--seed", cfg.seed, "seed for randomized checks");
    sub->add_option("--vertex", cfg.vertex, "component vertex (default: the source)");
    sub->add_option("--shift", cfg.shift, "component shift")->check(CLI::NonNegativeNumber);
    sub->add_flag("--single", cfg.single, "decompose: one cut only");
    sub->callback([&chosen, &c] { chosen = &c; });
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::invalid_input);
  }

  if (chosen->inputs == 1) ctx.cfg.inputs = {single_input};
  try {
    return chosen->handler(ctx);
  } catch (const Error& e) {
    out.flush();
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::internal);
  }
}

}  // namespace tiltlab::cli
