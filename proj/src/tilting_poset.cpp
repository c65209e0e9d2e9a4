#include "tiltlab/tilting_poset.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "tiltlab/errors.hpp"

namespace tiltlab {

std::optional<int> HasseGraph::index_of(const ShiftVector& v) const {
  auto it = std::find(nodes.begin(), nodes.end(), v);
  if (it == nodes.end()) return std::nullopt;
  return static_cast<int>(it - nodes.begin());
}

ShiftVector minimal_lk(const LMatrix& l, Vertex i) {
  if (!l.min_degree_ok()) throw PreconditionError("condition (b) fails");
  if (i < 0 || i >= l.size()) throw ValidationError("vertex out of range");
  const auto row = l.row(i);
  return ShiftVector(std::vector<Shift>(row.begin(), row.end()));
}

std::vector<ShiftVector> enumerate_lk(const LMatrix& l, Vertex i, Shift r) {
  if (!l.min_degree_ok()) throw PreconditionError("condition (b) fails");
  const int n = l.size();
  if (i < 0 || i >= n) throw ValidationError("vertex out of range");
  if (r < 0) throw ValidationError("negative shift");

  // Coordinates are fixed in decreasing vertex order after i itself.
  std::vector<Vertex> order{i};
  for (Vertex k = n - 1; k >= 0; --k)
    if (k != i) order.push_back(k);

  std::vector<Shift> v(n, 0);
  v[i] = r;
  std::vector<ShiftVector> out;
  std::function<void(std::size_t)> dfs = [&](std::size_t depth) {
    if (depth == order.size()) {
      out.emplace_back(v);
      return;
    }
    const Vertex k = order[depth];
    Shift lo = 0, hi = r + l(i, k);
    for (std::size_t d = 0; d < depth; ++d) {
      const Vertex j = order[d];
      lo = std::max(lo, v[j] - l(k, j));  // v_j <= v_k + l(k, j)
      hi = std::min(hi, v[j] + l(j, k));  // v_k <= v_j + l(j, k)
    }
    for (Shift x = lo; x <= hi; ++x) {
      v[k] = x;
      dfs(depth + 1);
    }
  };
  dfs(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> cover_relations(const std::vector<ShiftVector>& nodes) {
  const int count = static_cast<int>(nodes.size());
  auto strictly_below = [&](int a, int b) {
    return a != b && nodes[a] != nodes[b] && nodes[a].componentwise_le(nodes[b]);
  };
  std::vector<std::pair<int, int>> covers;
  for (int u = 0; u < count; ++u) {
    for (int v = 0; v < count; ++v) {
      if (!strictly_below(u, v)) continue;
      bool between = false;
      for (int w = 0; w < count && !between; ++w)
        between = strictly_below(u, w) && strictly_below(w, v);
      if (!between) covers.emplace_back(u, v);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

HasseGraph hasse_edges(const LMatrix& l, std::vector<ShiftVector> nodes,
                       std::optional<Vertex> component_vertex, bool check_covers) {
  HasseGraph g;
  g.nodes = std::move(nodes);
  g.component_vertex = component_vertex;
  std::map<ShiftVector, int> index;
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    if (!in_L(l, g.nodes[k])) throw ValidationError("node " + g.nodes[k].to_string() + " is not in L(Q)");
    if (!index.emplace(g.nodes[k], static_cast<int>(k)).second)
      throw ValidationError("duplicate node " + g.nodes[k].to_string());
    g.component.push_back(component_vertex ? g.nodes[k][*component_vertex] : 0);
  }
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    for (std::size_t c = 0; c < g.nodes[k].size(); ++c) {
      ShiftVector up = g.nodes[k].plus_unit(c);
      if (auto it = index.find(up); it != index.end())
        g.edges.emplace_back(static_cast<int>(k), it->second);
      else if (in_L(l, up))
        g.truncated.emplace_back(static_cast<int>(k), std::move(up));
    }
  }
  if (check_covers) {
    auto sorted = g.edges;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != cover_relations(g.nodes))
      throw InternalError("single-increment edges differ from the cover relations");
  }
  return g;
}

namespace {

Vertex require_theorem_hypotheses(const Quiver& q) {
  if (!q.is_connected()) throw ValidationError("quiver is disconnected");
  if (find_cycle(q)) throw ValidationError("quiver has a directed cycle");
  const auto src = q.sources();
  if (src.size() != 1)
    throw PreconditionError("condition (a) fails: " + std::to_string(src.size()) + " sources");
  if (auto bad = min_degree_violation(q))
    throw PreconditionError("condition (b) fails at vertex " + std::to_string(*bad));
  return src.front();
}

// Weakly connected components restricted to the given node subset.
bool weakly_connected(std::size_t count, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<int>& members) {
  if (members.empty()) return true;
  std::vector<std::vector<int>> adj(count);
  std::vector<bool> in_set(count, false);
  for (int m : members) in_set[m] = true;
  for (auto [u, v] : edges) {
    if (!in_set[u] || !in_set[v]) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(count, false);
  std::deque<int> todo{members.front()};
  seen[members.front()] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    int u = todo.front();
    todo.pop_front();
    for (int v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      ++reached;
      todo.push_back(v);
    }
  }
  return reached == members.size();
}

}  // namespace

HasseGraph tp_window(const Quiver& q, Shift max_shift, bool check_covers) {
  const Vertex s = require_theorem_hypotheses(q);
  if (max_shift < 0) throw ValidationError("negative shift bound");
  const LMatrix l = l_matrix(q);
  std::vector<ShiftVector> nodes;
  for (Shift r = 0; r <= max_shift; ++r) {
    auto comp = enumerate_lk(l, s, r);
    nodes.insert(nodes.end(), comp.begin(), comp.end());
  }
  return hasse_edges(l, std::move(nodes), s, check_covers);
}

bool TheoremReport::passed() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](const AssertionResult& a) { return a.passed; });
}

TheoremReport verify_theorem_t(const Quiver& q, Shift max_shift) {
  const Vertex s = require_theorem_hypotheses(q);
  if (max_shift < 2) throw ValidationError("verify-theorem needs a shift bound of at least 2");
  const LMatrix l = l_matrix(q);
  const HasseGraph g = tp_window(q, max_shift);
  const int n = q.size();
  const auto count = g.nodes.size();

  std::vector<std::vector<int>> by_comp(max_shift + 1);
  TheoremReport rep;

  // (1) the window is partitioned by the source coordinate, and each part is
  // exactly the component enumerated at that shift.
  {
    AssertionResult a{1, "partition by source shift", true, {}};
    for (std::size_t k = 0; k < count && a.passed; ++k) {
      const Shift c = g.nodes[k][s];
      if (c < 0 || c > max_shift || g.component[k] != c) {
        a.passed = false;
        a.detail = "node " + g.nodes[k].to_string() + " has no valid component";
      } else {
        by_comp[c].push_back(static_cast<int>(k));
      }
    }
    for (Shift r = 0; r <= max_shift && a.passed; ++r) {
      std::vector<ShiftVector> members;
      for (int k : by_comp[r]) members.push_back(g.nodes[k]);
      std::sort(members.begin(), members.end());
      if (members.empty() || members != enumerate_lk(l, s, r)) {
        a.passed = false;
        a.detail = "component " + std::to_string(r) + " differs from its enumeration";
      }
    }
    rep.assertions.push_back(a);
  }

  // (2) v -> v + (1,...,1) is a quiver isomorphism between consecutive components.
  {
    AssertionResult a{2, "translation isomorphism", true, {}};
    std::map<std::pair<int, int>, bool> edge_set;
    for (auto e : g.edges) edge_set[e] = true;
    for (Shift r = 0; r < max_shift && a.passed; ++r) {
      if (by_comp[r].size() != by_comp[r + 1].size()) {
        a.passed = false;
        a.detail = "components " + std::to_string(r) + " and " + std::to_string(r + 1) + " differ in size";
        break;
      }
      std::map<int, int> image;
      for (int k : by_comp[r]) {
        auto t = g.index_of(g.nodes[k].translated(1));
        if (!t || g.component[*t] != r + 1) {
          a.passed = false;
          a.detail = "translate of " + g.nodes[k].to_string() + " missing";
          break;
        }
        image[k] = *t;
      }
      if (!a.passed) break;
      std::size_t inner_r = 0, inner_next = 0;
      for (auto [u, v] : g.edges) {
        if (g.component[u] == r && g.component[v] == r) {
          ++inner_r;
          if (!edge_set.count({image[u], image[v]})) {
            a.passed = false;
            a.detail = "edge " + g.nodes[u].to_string() + "->" + g.nodes[v].to_string() + " not translated";
            break;
          }
        }
        if (g.component[u] == r + 1 && g.component[v] == r + 1) ++inner_next;
      }
      if (a.passed && inner_r != inner_next) {
        a.passed = false;
        a.detail = "edge counts differ between components " + std::to_string(r) + " and " +
                   std::to_string(r + 1);
      }
    }
    rep.assertions.push_back(a);
  }

  // (3) component size bound.
  {
    AssertionResult a{3, "component size <= 2^(n-1)", true, {}};
    const std::size_t bound = std::size_t{1} << (n - 1);
    for (Shift r = 0; r <= max_shift; ++r) {
      if (by_comp[r].size() > bound) {
        a.passed = false;
        a.detail = "component " + std::to_string(r) + " has " + std::to_string(by_comp[r].size()) + " nodes";
        break;
      }
    }
    rep.assertions.push_back(a);
  }

  // (4) every component is connected.
  {
    AssertionResult a{4, "component connectivity", true, {}};
    for (Shift r = 0; r <= max_shift; ++r) {
      if (!weakly_connected(count, g.edges, by_comp[r])) {
        a.passed = false;
        a.detail = "component " + std::to_string(r) + " is disconnected";
        break;
      }
    }
    rep.assertions.push_back(a);
  }

  // (5) edges change the source coordinate by 0 or 1.
  {
    AssertionResult a{5, "cross edges raise the source shift by 1", true, {}};
    for (auto [u, v] : g.edges) {
      const Shift d = g.component[v] - g.component[u];
      if (d != 0 && d != 1) {
        a.passed = false;
        a.detail = "edge " + g.nodes[u].to_string() + "->" + g.nodes[v].to_string();
        break;
      }
    }
    rep.assertions.push_back(a);
  }

  // (6) the whole window is connected.
  {
    AssertionResult a{6, "window connectivity", true, {}};
    std::vector<int> all(count);
    for (std::size_t k = 0; k < count; ++k) all[k] = static_cast<int>(k);
    if (!weakly_connected(count, g.edges, all)) {
      a.passed = false;
      a.detail = "window is disconnected";
    }
    rep.assertions.push_back(a);
  }
  return rep;
}

IdealReport order_ideals(const Quiver& q) {
  if (q.size() < 2) throw PreconditionError("the single point has no tilting side");
  if (!classify(q).in_A_circ) throw PreconditionError("quiver is not in the completion class A°");
  const int n = q.size();
  IdealReport rep;
  rep.source = q.sources().front();
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v)
    if (v != rep.source) members.push_back(v);
  if (members.size() > 24) throw ValidationError("too many vertices for ideal enumeration");

  const auto paths = path_counts(q);
  const std::uint32_t subsets = 1u << members.size();
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    bool closed = true;
    for (std::size_t a = 0; a < members.size() && closed; ++a) {
      if (!(mask >> a & 1u)) continue;
      for (std::size_t b = 0; b < members.size() && closed; ++b) {
        // members[b] <= members[a] when there is a path b -> a
        if (paths[members[b]][members[a]] > 0 && !(mask >> b & 1u)) closed = false;
      }
    }
    if (!closed) continue;
    masks.push_back(mask);
    std::vector<Vertex> ideal;
    std::vector<Shift> r(n, 0);
    for (std::size_t a = 0; a < members.size(); ++a) {
      if (mask >> a & 1u)
        ideal.push_back(members[a]);
      else
        r[members[a]] = 1;
    }
    rep.ideals.push_back(std::move(ideal));
    rep.vectors.emplace_back(std::move(r));
  }

  auto sorted = rep.vectors;
  std::sort(sorted.begin(), sorted.end());
  rep.matches_enumeration = sorted == enumerate_lk(l_matrix(q), rep.source, 0);

  rep.order_isomorphic = true;
  for (std::size_t x = 0; x < masks.size(); ++x) {
    for (std::size_t y = 0; y < masks.size(); ++y) {
      const bool subset = (masks[x] & ~masks[y]) == 0;
      const bool dominated = rep.vectors[y].componentwise_le(rep.vectors[x]);
      if (subset != dominated) rep.order_isomorphic = false;
    }
  }
  return rep;
}

std::optional<std::string> certify_tilting(const PreprojOracle& oracle, const LMatrix& l,
                                           const ShiftVector& v) {
  const int n = l.size();
  if (static_cast<int>(v.size()) != n) throw ValidationError("shift vector length mismatch");
  auto first_nonvanishing = [&](const ShiftVector& w) -> std::optional<std::pair<Vertex, Vertex>> {
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j)
        if (oracle.ext_dim({i, w[i]}, {j, w[j]}) != 0) return std::make_pair(i, j);
    return std::nullopt;
  };
  if (auto bad = first_nonvanishing(v))
    return "Ext^1 between summands " + std::to_string(bad->first) + " and " +
           std::to_string(bad->second) + " of " + v.to_string() + " is nonzero";
  for (Vertex k = 0; k < n; ++k) {
    if (v[k] == 0) continue;
    ShiftVector w = v;
    --w[k];
    if (!in_L(l, w) && !first_nonvanishing(w))
      return "decrement " + w.to_string() + " leaves L(Q) but is Ext-free";
  }
  return std::nullopt;
}

Quiver top_ball(const HasseGraph& g, int root, int radius) {
  const auto count = g.nodes.size();
  std::vector<std::vector<int>> succ(count);
  for (auto [u, v] : g.edges) succ[u].push_back(v);
  std::vector<int> dist(count, -1);
  std::deque<int> todo{root};
  dist[root] = 0;
  while (!todo.empty()) {
    int u = todo.front();
    todo.pop_front();
    if (dist[u] == radius) continue;
    for (int v : succ[u]) {
      if (dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      todo.push_back(v);
    }
  }
  std::vector<int> local(count, -1);
  int k = 0;
  for (std::size_t u = 0; u < count; ++u)
    if (dist[u] >= 0) local[u] = k++;
  std::vector<std::pair<Vertex, Vertex>> arrows;
  for (auto [u, v] : g.edges)
    if (local[u] >= 0 && local[v] >= 0) arrows.emplace_back(local[u], local[v]);
  return Quiver(k, arrows);
}

}  // namespace tiltlab
