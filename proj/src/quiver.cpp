#include "tiltlab/quiver.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "tiltlab/errors.hpp"
#include "tiltlab/ext_metric.hpp"
#include "tiltlab/structure_maps.hpp"

namespace tiltlab {

Quiver::Quiver(int n, const std::vector<std::pair<Vertex, Vertex>>& arrows,
               std::string name)
    : n_(n), name_(std::move(name)) {
  if (n < 0) throw ValidationError("negative vertex count");
  arrows_.reserve(arrows.size());
  for (const auto& [s, t] : arrows) {
    if (s < 0 || s >= n || t < 0 || t >= n) {
      throw ValidationError("arrow " + std::to_string(s) + "->" + std::to_string(t) +
                            " has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (s == t) throw ValidationError("loop at vertex " + std::to_string(s));
    arrows_.push_back({s, t, static_cast<int>(arrows_.size())});
  }
}

VertexStar Quiver::star(Vertex x) const {
  VertexStar st;
  for (const auto& a : arrows_) {
    if (a.source == x) st.out_arrows.push_back(a.id);
    if (a.target == x) st.in_arrows.push_back(a.id);
  }
  return st;
}

int Quiver::out_degree(Vertex x) const {
  return static_cast<int>(std::count_if(arrows_.begin(), arrows_.end(),
                                        [x](const Arrow& a) { return a.source == x; }));
}

int Quiver::in_degree(Vertex x) const {
  return static_cast<int>(std::count_if(arrows_.begin(), arrows_.end(),
                                        [x](const Arrow& a) { return a.target == x; }));
}

std::vector<Vertex> Quiver::sources() const {
  std::vector<Vertex> out;
  for (Vertex x = 0; x < n_; ++x)
    if (is_source(x)) out.push_back(x);
  return out;
}

std::vector<Vertex> Quiver::sinks() const {
  std::vector<Vertex> out;
  for (Vertex x = 0; x < n_; ++x)
    if (is_sink(x)) out.push_back(x);
  return out;
}

int Quiver::multiplicity(Vertex u, Vertex v) const {
  return static_cast<int>(std::count_if(arrows_.begin(), arrows_.end(), [u, v](const Arrow& a) {
    return a.source == u && a.target == v;
  }));
}

bool Quiver::is_normalized() const {
  return std::all_of(arrows_.begin(), arrows_.end(),
                     [](const Arrow& a) { return a.source > a.target; });
}

bool Quiver::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<Vertex> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<Vertex(Vertex)> find = [&](Vertex x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  int components = n_;
  for (const auto& a : arrows_) {
    Vertex ra = find(a.source), rb = find(a.target);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

std::vector<std::pair<Vertex, Vertex>> Quiver::arrow_pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(arrows_.size());
  for (const auto& a : arrows_) out.emplace_back(a.source, a.target);
  return out;
}

Quiver Quiver::without_arrow(int id) const {
  auto pairs = arrow_pairs();
  pairs.erase(pairs.begin() + id);
  return Quiver(n_, pairs, name_);
}

Quiver Quiver::with_arrows(const std::vector<std::pair<Vertex, Vertex>>& extra) const {
  auto pairs = arrow_pairs();
  pairs.insert(pairs.end(), extra.begin(), extra.end());
  return Quiver(n_, pairs, name_);
}

Quiver Quiver::renamed(std::string name) const {
  Quiver q = *this;
  q.name_ = std::move(name);
  return q;
}

bool labeled_equal(const Quiver& a, const Quiver& b) {
  if (a.size() != b.size() || a.arrow_count() != b.arrow_count()) return false;
  auto pa = a.arrow_pairs(), pb = b.arrow_pairs();
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  return pa == pb;
}

namespace {

std::string trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

int parse_int(const std::string& tok, int line, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
      throw std::out_of_range(tok);
    return static_cast<int>(v);
  } catch (const std::logic_error&) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + tok + "'");
  }
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
  std::string name;
  std::optional<int> n;
  std::vector<std::pair<Vertex, Vertex>> arrows;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    std::istringstream in(line);
    std::string keyword;
    in >> keyword;
    std::vector<std::string> args;
    for (std::string tok; in >> tok;) args.push_back(tok);

    if (keyword == "quiver") {
      if (args.empty()) throw ParseError(line_no, "'quiver' needs a name");
      if (!name.empty()) throw ParseError(line_no, "duplicate 'quiver' line");
      name = trim(line.substr(keyword.size()));
    } else if (keyword == "vertices") {
      if (args.size() != 1) throw ParseError(line_no, "'vertices' takes exactly one count");
      if (n) throw ParseError(line_no, "duplicate 'vertices' line");
      int count = parse_int(args[0], line_no, "vertex count");
      if (count <= 0) throw ParseError(line_no, "empty vertex set");
      n = count;
    } else if (keyword == "arrow") {
      if (args.size() != 2) throw ParseError(line_no, "'arrow' takes a source and a target");
      if (!n) throw ParseError(line_no, "'arrow' before 'vertices'");
      int s = parse_int(args[0], line_no, "source");
      int t = parse_int(args[1], line_no, "target");
      for (int v : {s, t}) {
        if (v < 0 || v >= *n)
          throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range 0.." +
                                        std::to_string(*n - 1));
      }
      if (s == t) throw ParseError(line_no, "loop at vertex " + std::to_string(s));
      arrows.emplace_back(s, t);
    } else {
      throw ParseError(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (!n) throw ParseError(0, "missing 'vertices' line");
  return Quiver(*n, arrows, name);
}

std::string format_quiver(const Quiver& q) {
  std::ostringstream out;
  if (!q.name().empty()) out << "quiver " << q.name() << '\n';
  out << "vertices " << q.size() << '\n';
  for (const auto& a : q.arrows()) out << "arrow " << a.source << ' ' << a.target << '\n';
  return out.str();
}

std::optional<std::vector<Vertex>> find_cycle(const Quiver& q) {
  const int n = q.size();
  std::vector<std::vector<Vertex>> succ(n);
  for (const auto& a : q.arrows()) succ[a.source].push_back(a.target);

  enum Color { white, grey, black };
  std::vector<Color> color(n, white);
  std::vector<Vertex> stack;
  std::optional<std::vector<Vertex>> cycle;

  std::function<bool(Vertex)> dfs = [&](Vertex u) {
    color[u] = grey;
    stack.push_back(u);
    for (Vertex v : succ[u]) {
      if (color[v] == grey) {
        auto it = std::find(stack.begin(), stack.end(), v);
        cycle = std::vector<Vertex>(it, stack.end());
        return true;
      }
      if (color[v] == white && dfs(v)) return true;
    }
    stack.pop_back();
    color[u] = black;
    return false;
  };
  for (Vertex u = 0; u < n; ++u)
    if (color[u] == white && dfs(u)) break;
  return cycle;
}

NormalizeResult normalize(const Quiver& q) {
  const int n = q.size();
  std::vector<int> pending_out(n, 0);
  std::vector<std::vector<Vertex>> pred(n);
  for (const auto& a : q.arrows()) {
    ++pending_out[a.source];
    pred[a.target].push_back(a.source);
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex x = 0; x < n; ++x)
    if (pending_out[x] == 0) ready.push(x);

  std::vector<Vertex> perm(n, -1);
  int next = 0;
  while (!ready.empty()) {
    Vertex x = ready.top();
    ready.pop();
    perm[x] = next++;
    for (Vertex p : pred[x])
      if (--pending_out[p] == 0) ready.push(p);
  }
  if (next != n) {
    auto cycle = find_cycle(q);
    std::string msg = "directed cycle:";
    if (cycle) {
      for (Vertex v : *cycle) msg += " " + std::to_string(v) + " ->";
      msg += " " + std::to_string(cycle->front());
    }
    throw ValidationError(msg);
  }

  std::vector<std::pair<Vertex, Vertex>> arrows;
  for (const auto& a : q.arrows()) arrows.emplace_back(perm[a.source], perm[a.target]);
  NormalizeResult result{Quiver(n, arrows, q.name()), perm, q.is_connected()};
  return result;
}

std::vector<std::vector<std::int64_t>> path_counts(const Quiver& q) {
  const int n = q.size();
  // Process vertices so that every arrow target is finished before its source.
  auto order = normalize(q).permutation;  // order[old] = rank; sinks first
  std::vector<Vertex> by_rank(n);
  for (Vertex v = 0; v < n; ++v) by_rank[order[v]] = v;

  std::vector<std::vector<std::int64_t>> paths(n, std::vector<std::int64_t>(n, 0));
  for (Vertex u : by_rank) {
    paths[u][u] = 1;
    for (const auto& a : q.arrows()) {
      if (a.source != u) continue;
      for (Vertex v = 0; v < n; ++v) {
        if (__builtin_add_overflow(paths[u][v], paths[a.target][v], &paths[u][v]))
          throw OverflowError("path count overflow from vertex " + std::to_string(u));
      }
    }
  }
  return paths;
}

std::optional<Vertex> min_degree_violation(const Quiver& q) {
  for (Vertex x = 0; x < q.size(); ++x)
    if (q.degree(x) < 2) return x;
  return std::nullopt;
}

ClassFlags classify(const Quiver& q) {
  ClassFlags f;
  f.connected = q.is_connected();
  f.unique_source = q.sources().size() == 1;
  f.unique_sink = q.sinks().size() == 1;
  f.min_degree_ok = !min_degree_violation(q).has_value();
  if (f.connected && !find_cycle(q)) {
    f.l_le_1 = l_max(l_matrix(q)) <= 1;
  }
  f.in_A_circ = f.connected && f.unique_source && f.l_le_1 &&
                (q.size() == 1 || f.min_degree_ok);
  f.in_S = f.in_A_circ && eligible_arrows(q).empty();
  return f;
}

WeightedDigraph doubled(const Quiver& q) {
  WeightedDigraph g;
  g.n = q.size();
  for (const auto& a : q.arrows()) g.arcs.push_back({a.source, a.target, 1, a.id});
  for (const auto& a : q.arrows()) g.arcs.push_back({a.target, a.source, 0, a.id});
  return g;
}

std::optional<std::vector<Vertex>> is_isomorphic(const Quiver& a, const Quiver& b) {
  const int n = a.size();
  if (n != b.size() || a.arrow_count() != b.arrow_count()) return std::nullopt;

  auto matrix = [n](const Quiver& q) {
    std::vector<int> m(static_cast<std::size_t>(n) * n, 0);
    for (const auto& arr : q.arrows()) ++m[arr.source * n + arr.target];
    return m;
  };
  const auto ma = matrix(a), mb = matrix(b);
  std::vector<std::pair<int, int>> deg_a(n), deg_b(n);
  for (Vertex v = 0; v < n; ++v) {
    deg_a[v] = {a.in_degree(v), a.out_degree(v)};
    deg_b[v] = {b.in_degree(v), b.out_degree(v)};
  }
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<Vertex> f(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(Vertex)> assign = [&](Vertex k) {
    if (k == n) return true;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v] || deg_a[k] != deg_b[v]) continue;
      bool ok = true;
      for (Vertex u = 0; u < k && ok; ++u) {
        ok = ma[k * n + u] == mb[v * n + f[u]] && ma[u * n + k] == mb[f[u] * n + v];
      }
      if (!ok) continue;
      f[k] = v;
      used[v] = true;
      if (assign(k + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return f;
}

namespace fixtures {

Quiver point() { return Quiver(1, {}, "PT"); }
Quiver kronecker() { return Quiver(2, {{1, 0}, {1, 0}}, "K2"); }
Quiver triangle() { return Quiver(3, {{2, 1}, {1, 0}, {2, 0}}, "T3"); }
Quiver diamond() { return Quiver(4, {{3, 2}, {3, 1}, {2, 0}, {1, 0}}, "D4"); }
Quiver cube4() {
  return Quiver(4, {{3, 0}, {3, 0}, {3, 1}, {3, 1}, {3, 2}, {3, 2}}, "C4");
}
Quiver chain(int k) {
  std::vector<std::pair<Vertex, Vertex>> arrows;
  for (Vertex i = 1; i < k; ++i) arrows.emplace_back(i, i - 1);
  return Quiver(k, arrows, "A" + std::to_string(k));
}

}  // namespace fixtures

}  // namespace tiltlab
