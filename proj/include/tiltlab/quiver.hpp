#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tiltlab {

using Vertex = int;

struct Arrow {
  Vertex source;
  Vertex target;
  int id;  // position in the arrow list
};

/// Arrows leaving (s(x)) and entering (t(x)) a vertex, by arrow id.
struct VertexStar {
  std::vector<int> out_arrows;
  std::vector<int> in_arrows;
  int degree() const { return static_cast<int>(out_arrows.size() + in_arrows.size()); }
};

// A finite loop-free directed multigraph on the vertices 0..n-1.
//
// Parallel arrows are kept as separate entries; an arrow's id is its index in
// arrows(). Construction rejects loops and out-of-range endpoints but accepts
// cycles, disconnected graphs and any labelling: normalize() and the
// predicates below decide those.
class Quiver {
 public:
  Quiver() = default;
  Quiver(int n, const std::vector<std::pair<Vertex, Vertex>>& arrows,
         std::string name = {});

  int size() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& name() const { return name_; }

  VertexStar star(Vertex x) const;
  int out_degree(Vertex x) const;
  int in_degree(Vertex x) const;
  int degree(Vertex x) const { return out_degree(x) + in_degree(x); }
  bool is_source(Vertex x) const { return in_degree(x) == 0; }
  bool is_sink(Vertex x) const { return out_degree(x) == 0; }
  std::vector<Vertex> sources() const;
  std::vector<Vertex> sinks() const;

  /// Number of arrows u -> v.
  int multiplicity(Vertex u, Vertex v) const;

  /// Every arrow satisfies source > target.
  bool is_normalized() const;
  /// The underlying undirected graph is connected (true for n <= 1).
  bool is_connected() const;

  /// (source, target) pairs in listing order.
  std::vector<std::pair<Vertex, Vertex>> arrow_pairs() const;

  Quiver without_arrow(int id) const;
  Quiver with_arrows(const std::vector<std::pair<Vertex, Vertex>>& extra) const;
  Quiver renamed(std::string name) const;

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
  std::string name_;
};

/// Same vertex count and the same arrow multiset. Names are ignored.
bool labeled_equal(const Quiver& a, const Quiver& b);

/// Parse the line-oriented quiver format:
///   quiver <name>        (optional)
///   vertices <n>         (required, n >= 1)
///   arrow <src> <tgt>    (repeat per multiplicity)
/// "#" starts a comment. Throws ParseError with the offending line.
Quiver parse_quiver(std::string_view text);

/// Inverse of parse_quiver for valid quivers.
std::string format_quiver(const Quiver& q);

struct NormalizeResult {
  Quiver quiver;
  std::vector<Vertex> permutation;  // permutation[old] = new
  bool connected = true;
};

/// Relabel so that every arrow decreases the vertex index. Labels are handed
/// out from 0 upwards to vertices whose out-neighbours are all labelled,
/// smallest original index first. Throws ValidationError naming a cycle.
NormalizeResult normalize(const Quiver& q);

/// Some directed cycle as a vertex sequence, or nothing if q is acyclic.
std::optional<std::vector<Vertex>> find_cycle(const Quiver& q);

/// Number of directed paths u -> v (trivial path included when u == v),
/// indexed [u][v]. Requires an acyclic quiver. Throws OverflowError.
std::vector<std::vector<std::int64_t>> path_counts(const Quiver& q);

struct ClassFlags {
  bool connected = false;
  bool unique_source = false;
  bool min_degree_ok = false;  // every vertex has #s(x) + #t(x) >= 2
  bool unique_sink = false;
  bool l_le_1 = false;         // max l_Q <= 1 (false when disconnected)
  bool in_A_circ = false;      // completion class: see classify()
  bool in_S = false;           // in_A_circ and no reduction step applies
};

/// Decide the structural conditions of q. in_A_circ holds for the single
/// point and for connected quivers with a unique source, l <= 1 and minimum
/// degree 2 (exactly the quivers of the form Q° with Q unique-source).
ClassFlags classify(const Quiver& q);

/// First vertex violating the minimum-degree condition, if any.
std::optional<Vertex> min_degree_violation(const Quiver& q);

struct WeightedArc {
  Vertex from;
  Vertex to;
  int weight;  // 1 for an original arrow, 0 for its reversal
  int arrow;   // id of the underlying arrow
};

struct WeightedDigraph {
  int n = 0;
  std::vector<WeightedArc> arcs;
};

/// Each arrow x->y appears once with weight 1 and once reversed (y->x) with
/// weight 0. Forward arcs come first, in arrow order.
WeightedDigraph doubled(const Quiver& q);

/// Lexicographically least vertex bijection f with
/// multiplicity(u, v) == multiplicity(f(u), f(v)) for all u, v.
std::optional<std::vector<Vertex>> is_isomorphic(const Quiver& a, const Quiver& b);

namespace fixtures {
Quiver point();
Quiver kronecker();  // 1 => 0
Quiver triangle();   // 2->1, 1->0, 2->0
Quiver diamond();    // 3->2, 3->1, 2->0, 1->0
Quiver cube4();      // 3 => 0, 3 => 1, 3 => 2
/// k vertices, arrows i -> i-1.
Quiver chain(int k);
}  // namespace fixtures

}  // namespace tiltlab
