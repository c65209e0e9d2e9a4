#include "tiltlab/structure_maps.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "tiltlab/errors.hpp"
#include "tiltlab/tilting_poset.hpp"

namespace tiltlab {

CubeSubquiver::CubeSubquiver(int dim, std::vector<CubeNode> nodes) : dim_(dim), nodes_(std::move(nodes)) {
  if (dim < 0) throw ValidationError("negative cube dimension");
  for (const auto& v : nodes_) {
    if (static_cast<int>(v.size()) != dim)
      throw ValidationError("cube node " + to_string(v) + " has length " + std::to_string(v.size()) +
                            ", expected " + std::to_string(dim));
    for (int x : v)
      if (x != 0 && x != 1) throw ValidationError("cube node " + to_string(v) + " is not a 0/1 vector");
  }
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end())
    throw ValidationError("duplicate cube node");
  for (std::size_t u = 0; u < nodes_.size(); ++u) {
    for (int i = 0; i < dim_; ++i) {
      if (nodes_[u][i] != 0) continue;
      CubeNode up = nodes_[u];
      up[i] = 1;
      if (auto w = index_of(up)) edges_.emplace_back(static_cast<int>(u), *w);
    }
  }
}

std::optional<int> CubeSubquiver::index_of(const CubeNode& v) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
  if (it == nodes_.end() || *it != v) return std::nullopt;
  return static_cast<int>(it - nodes_.begin());
}

Quiver CubeSubquiver::as_quiver() const {
  std::vector<std::pair<Vertex, Vertex>> arrows(edges_.begin(), edges_.end());
  return Quiver(static_cast<int>(nodes_.size()), arrows);
}

std::string to_string(const CubeNode& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

namespace {

void require_A_circ(const Quiver& q, const char* what) {
  const auto f = classify(q);
  if (f.in_A_circ) return;
  std::string why = !f.connected       ? "disconnected"
                    : !f.unique_source ? "no unique source"
                    : !f.min_degree_ok ? "condition (b) fails"
                                       : "l(Q) > 1";
  throw PreconditionError(std::string(what) + " is not in the completion class A° (" + why + ")");
}

bool le(const CubeNode& a, const CubeNode& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

CubeNode restrict(const CubeNode& v, const std::vector<int>& coords) {
  CubeNode out;
  out.reserve(coords.size());
  for (int c : coords) out.push_back(v[c]);
  return out;
}

}  // namespace

Quiver complete(const Quiver& q) {
  std::vector<std::pair<Vertex, Vertex>> extra;
  for (Vertex x : q.sources()) {
    if (q.is_sink(x)) continue;
    for (Vertex y : q.sinks())
      if (!q.is_source(y)) extra.emplace_back(x, y);
  }
  return q.with_arrows(extra);
}

Quiver amalgam(const Quiver& upper, const Quiver& lower, AmalgamMode mode) {
  const int shift = lower.size();
  auto arrows = lower.arrow_pairs();
  for (auto [s, t] : upper.arrow_pairs()) arrows.emplace_back(s + shift, t + shift);
  const auto from = mode == AmalgamMode::corrected ? upper.sinks() : upper.sources();
  const auto to = mode == AmalgamMode::corrected ? lower.sources() : lower.sinks();
  for (Vertex y : from)
    for (Vertex x : to) arrows.emplace_back(y + shift, x);
  return Quiver(upper.size() + lower.size(), arrows);
}

PhiResult phi(const Quiver& q1, const Quiver& q2, AmalgamMode mode) {
  require_A_circ(q1, "first argument");
  require_A_circ(q2, "second argument");
  PhiResult r;
  r.quiver = complete(amalgam(q1, q2, mode));
  r.in_A_circ = classify(r.quiver).in_A_circ;
  return r;
}

CubeSubquiver psi(const Quiver& q) {
  require_A_circ(q, "quiver");
  if (q.size() == 1) return CubeSubquiver(0, {CubeNode{}});
  const Vertex s = q.sources().front();
  std::vector<CubeNode> nodes;
  for (const auto& v : enumerate_lk(l_matrix(q), s, 0)) {
    CubeNode node;
    for (Vertex x = 0; x < q.size(); ++x) {
      if (x == s) continue;
      if (v[x] != 0 && v[x] != 1) throw InternalError("component vector " + v.to_string() + " is not 0/1");
      node.push_back(static_cast<int>(v[x]));
    }
    nodes.push_back(std::move(node));
  }
  return CubeSubquiver(q.size() - 1, std::move(nodes));
}

MeetJoin meet_join(const CubeNode& a, const CubeNode& b) {
  if (a.size() != b.size()) throw ValidationError("meet_join needs vectors of equal length");
  MeetJoin mj{a, a};
  for (std::size_t i = 0; i < a.size(); ++i) {
    mj.plus[i] = std::min(a[i], b[i]);
    mj.minus[i] = std::max(a[i], b[i]);
  }
  return mj;
}

const char* describe(LCondition c) {
  switch (c) {
    case LCondition::none: return "none";
    case LCondition::corners: return "(i) corners";
    case LCondition::paths: return "(ii) paths";
    case LCondition::closure: return "(iii) meet/join closure";
    case LCondition::unique_source_sink: return "unique source and sink";
  }
  return "?";
}

LMembership is_in_script_L(const CubeSubquiver& k) {
  const auto& nodes = k.nodes();
  const auto count = nodes.size();
  if (!k.contains(CubeNode(k.dim(), 0)) || !k.contains(CubeNode(k.dim(), 1)))
    return {false, LCondition::corners};

  std::vector<std::vector<int>> succ(count);
  std::vector<int> indeg(count, 0), outdeg(count, 0);
  for (auto [u, v] : k.edges()) {
    succ[u].push_back(v);
    ++outdeg[u];
    ++indeg[v];
  }
  for (std::size_t u = 0; u < count; ++u) {
    std::vector<bool> reach(count, false);
    std::deque<int> todo{static_cast<int>(u)};
    reach[u] = true;
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop_front();
      for (int y : succ[x])
        if (!reach[y]) reach[y] = true, todo.push_back(y);
    }
    for (std::size_t v = 0; v < count; ++v)
      if (le(nodes[u], nodes[v]) && !reach[v]) return {false, LCondition::paths};
  }

  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t v = u + 1; v < count; ++v) {
      const auto mj = meet_join(nodes[u], nodes[v]);
      if (!k.contains(mj.plus) || !k.contains(mj.minus)) return {false, LCondition::closure};
    }
  }

  const bool one_source = std::count(indeg.begin(), indeg.end(), 0) == 1;
  const bool one_sink = std::count(outdeg.begin(), outdeg.end(), 0) == 1;
  if (!one_source || !one_sink || !k.as_quiver().is_connected())
    return {false, LCondition::unique_source_sink};
  return {true, LCondition::none};
}

Quiver psi_inverse(const CubeSubquiver& k) {
  const auto m = is_in_script_L(k);
  if (!m.member) throw PreconditionError(std::string("cube subquiver is not in L: fails ") + describe(m.failed));
  const int d = k.dim();
  if (d == 0) return Quiver(1, {});

  // below[i][j]: i <=_K j, that is T_i >= T_j for every node T.
  std::vector<std::vector<bool>> below(d, std::vector<bool>(d, true));
  for (const auto& t : k.nodes())
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (t[i] < t[j]) below[i][j] = false;
  auto strictly = [&](int i, int j) {
    if (i != j && below[i][j] && below[j][i])
      throw InternalError("coordinates " + std::to_string(i) + " and " + std::to_string(j) +
                          " are not separated by any node");
    return i != j && below[i][j];
  };

  std::vector<std::pair<Vertex, Vertex>> hasse;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (!strictly(j, i)) continue;
      bool covered = true;
      for (int c = 0; c < d && covered; ++c)
        if (strictly(j, c) && strictly(c, i)) covered = false;
      if (covered) hasse.emplace_back(i, j);
    }
  }
  return complete(amalgam(Quiver(1, {}), Quiver(d, hasse), AmalgamMode::corrected));
}

std::vector<int> eligible_arrows(const Quiver& q) {
  const auto paths = path_counts(q);
  std::vector<Arrow> arrows = q.arrows();
  std::sort(arrows.begin(), arrows.end(), [](const Arrow& a, const Arrow& b) {
    return std::tie(a.source, a.target, a.id) < std::tie(b.source, b.target, b.id);
  });
  std::vector<int> out;
  for (const auto& a : arrows) {
    const auto walks = paths[a.source][a.target];
    const bool outer = q.is_source(a.source) && q.is_sink(a.target);
    const bool ok = outer ? walks >= 3 && q.multiplicity(a.source, a.target) >= 2 : walks >= 2;
    if (ok) out.push_back(a.id);
  }
  return out;
}

std::optional<Quiver> leadsto_step(const Quiver& q) {
  require_A_circ(q, "quiver");
  const auto ids = eligible_arrows(q);
  if (ids.empty()) return std::nullopt;
  return q.without_arrow(ids.front());
}

namespace {

Quiver reduce(const Quiver& q, const std::function<int(const std::vector<int>&)>& pick) {
  require_A_circ(q, "quiver");
  Quiver cur = q;
  for (;;) {
    const auto ids = eligible_arrows(cur);
    if (ids.empty()) return cur;
    cur = cur.without_arrow(pick(ids));
    if (!classify(cur).in_A_circ) throw InternalError("reduction step left the completion class");
  }
}

}  // namespace

Quiver normal_form(const Quiver& q) {
  return reduce(q, [](const std::vector<int>& ids) { return ids.front(); });
}

Quiver random_normal_form(const Quiver& q, std::mt19937_64& rng) {
  return reduce(q, [&rng](const std::vector<int>& ids) {
    std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
    return ids[pick(rng)];
  });
}

Equivalence equivalent(const Quiver& a, const Quiver& b) {
  const Quiver na = normal_form(a);
  const Quiver nb = normal_form(b);
  Equivalence e;
  e.labeled = labeled_equal(na, nb);
  e.equivalent = e.labeled || is_isomorphic(na, nb).has_value();
  return e;
}

CubeSubquiver cube_amalgam(const CubeSubquiver& first, const CubeSubquiver& second) {
  const int d1 = first.dim(), d2 = second.dim();
  std::vector<CubeNode> nodes;
  for (const auto& x : first.nodes()) {
    CubeNode v = x;
    v.resize(d1 + 1 + d2, 0);
    nodes.push_back(std::move(v));
  }
  for (const auto& y : second.nodes()) {
    CubeNode v(d1 + 1, 1);
    v.insert(v.end(), y.begin(), y.end());
    nodes.push_back(std::move(v));
  }
  return CubeSubquiver(d1 + 1 + d2, std::move(nodes));
}

namespace {

struct Cut {
  std::vector<int> lower_coords;  // local coordinates set in T
  int glue;
  std::vector<int> upper_coords;  // local coordinates clear in T + e_glue
  CubeNode top, bottom;           // T and T + e_glue
};

std::optional<Cut> find_cut(const CubeSubquiver& k) {
  for (auto [u, v] : k.edges()) {
    const auto& t = k.nodes()[u];
    const auto& t2 = k.nodes()[v];
    bool splits = true;
    for (const auto& x : k.nodes())
      if (!le(x, t) && !le(t2, x)) splits = false;
    if (!splits) continue;
    Cut c;
    for (int i = 0; i < k.dim(); ++i) {
      if (t[i] != t2[i]) c.glue = i;
      if (t[i] == 1) c.lower_coords.push_back(i);
      if (t2[i] == 0) c.upper_coords.push_back(i);
    }
    c.top = t;
    c.bottom = t2;
    return c;
  }
  return std::nullopt;
}

void split(const CubeSubquiver& k, const std::vector<int>& ambient, bool maximal, DecompositionSeq& out) {
  const auto cut = find_cut(k);
  if (!cut) {
    out.pieces.push_back({k, ambient});
    return;
  }
  std::vector<CubeNode> lower, upper;
  for (const auto& x : k.nodes()) {
    if (le(x, cut->top))
      lower.push_back(restrict(x, cut->lower_coords));
    else
      upper.push_back(restrict(x, cut->upper_coords));
  }
  auto lift = [&](const std::vector<int>& local) {
    std::vector<int> a;
    for (int c : local) a.push_back(ambient[c]);
    return a;
  };
  CubeSubquiver lo(static_cast<int>(cut->lower_coords.size()), std::move(lower));
  CubeSubquiver hi(static_cast<int>(cut->upper_coords.size()), std::move(upper));
  if (maximal) {
    if (!is_in_script_L(lo).member || !is_in_script_L(hi).member)
      throw InternalError("decomposition piece left L");
    split(lo, lift(cut->lower_coords), true, out);
    out.glue.push_back(ambient[cut->glue]);
    split(hi, lift(cut->upper_coords), true, out);
  } else {
    out.pieces.push_back({lo, lift(cut->lower_coords)});
    out.glue.push_back(ambient[cut->glue]);
    out.pieces.push_back({hi, lift(cut->upper_coords)});
  }
}

}  // namespace

DecompositionSeq decompose(const CubeSubquiver& k, bool maximal) {
  const auto m = is_in_script_L(k);
  if (!m.member) throw PreconditionError(std::string("cube subquiver is not in L: fails ") + describe(m.failed));
  DecompositionSeq seq;
  seq.dim = k.dim();
  std::vector<int> ambient(k.dim());
  std::iota(ambient.begin(), ambient.end(), 0);
  split(k, ambient, maximal, seq);
  return seq;
}

CubeSubquiver recompose(const DecompositionSeq& seq) {
  std::vector<CubeNode> nodes;
  CubeNode prefix(seq.dim, 0);
  for (std::size_t t = 0; t < seq.pieces.size(); ++t) {
    const auto& piece = seq.pieces[t];
    for (const auto& y : piece.cube.nodes()) {
      CubeNode v = prefix;
      for (std::size_t c = 0; c < y.size(); ++c) v[piece.coords[c]] = y[c];
      nodes.push_back(std::move(v));
    }
    for (int c : piece.coords) prefix[c] = 1;
    if (t < seq.glue.size()) prefix[seq.glue[t]] = 1;
  }
  return CubeSubquiver(seq.dim, std::move(nodes));
}

bool cube_isomorphic(const CubeSubquiver& a, const CubeSubquiver& b) {
  return a.nodes().size() == b.nodes().size() && is_isomorphic(a.as_quiver(), b.as_quiver()).has_value();
}

CommuteReport verify_commute(const Quiver& q1, const Quiver& q2, AmalgamMode mode) {
  const auto p = phi(q1, q2, mode);
  if (!p.in_A_circ) throw PreconditionError("phi(q1, q2) is not in the completion class A°");
  const int n1 = q1.size(), n2 = q2.size();
  const Vertex s1 = q1.sources().front(), s2 = q2.sources().front();
  const int d2 = n2 - 1;

  auto rank = [](Vertex v, Vertex skip) { return v < skip ? v : v - 1; };
  // Position in the rhs layout of every coordinate of psi(phi).
  std::vector<int> position;
  for (Vertex v = 0; v < n1 + n2; ++v) {
    if (v == s1 + n2) continue;
    if (v < n2)
      position.push_back(v == s2 ? d2 : rank(v, s2));
    else
      position.push_back(d2 + 1 + rank(v - n2, s1));
  }

  CommuteReport rep;
  const CubeSubquiver raw = psi(p.quiver);
  std::vector<CubeNode> nodes;
  for (const auto& x : raw.nodes()) {
    CubeNode y(x.size());
    for (std::size_t c = 0; c < x.size(); ++c) y[position[c]] = x[c];
    nodes.push_back(std::move(y));
  }
  rep.lhs = CubeSubquiver(raw.dim(), std::move(nodes));
  rep.rhs = cube_amalgam(psi(q2), psi(q1));
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

SameTpReport same_tp(const Quiver& q1, const Quiver& q2, bool verify, Shift max_shift) {
  const auto a = decompose(psi(q1), true).pieces;
  const auto b = decompose(psi(q2), true).pieces;
  SameTpReport rep;
  rep.pieces1 = a.size();
  rep.pieces2 = b.size();
  rep.period = std::gcd(a.size(), b.size());
  bool same = true;
  for (std::size_t t = 0; t < a.size() && same; ++t) same = cube_isomorphic(a[t].cube, a[t % rep.period].cube);
  for (std::size_t t = 0; t < b.size() && same; ++t) same = cube_isomorphic(b[t].cube, b[t % rep.period].cube);
  for (std::size_t t = 0; t < rep.period && same; ++t) same = cube_isomorphic(a[t].cube, b[t].cube);
  rep.same = same;

  if (verify && q1.size() > 1 && q2.size() > 1) {
    auto ball = [max_shift](const Quiver& q) {
      const HasseGraph g = tp_window(q, max_shift);
      const auto root = g.index_of(ShiftVector(std::vector<Shift>(q.size(), 0)));
      if (!root) throw InternalError("zero vector missing from the window");
      return top_ball(g, *root, static_cast<int>(max_shift));
    };
    rep.windows_isomorphic = is_isomorphic(ball(q1), ball(q2)).has_value();
    if (rep.same && !*rep.windows_isomorphic)
      throw InternalError("decompositions agree but the window balls are not isomorphic");
  }
  return rep;
}

}  // namespace tiltlab
