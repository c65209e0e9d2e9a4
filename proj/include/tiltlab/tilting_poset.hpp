#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tiltlab/ar_oracle.hpp"
#include "tiltlab/ext_metric.hpp"
#include "tiltlab/quiver.hpp"

namespace tiltlab {

// Finite piece of the preprojective tilting quiver. Nodes are shift vectors;
// an edge (u, v) means node u > node v in the tilting order, which for shift
// vectors is v = u + e_i for one coordinate i.
struct HasseGraph {
  std::vector<ShiftVector> nodes;
  std::vector<std::pair<int, int>> edges;
  std::optional<Vertex> component_vertex;  // coordinate keying components
  std::vector<Shift> component;            // per node: value at component_vertex
  /// Edges of L(Q) leaving the node set: (from node, target vector).
  std::vector<std::pair<int, ShiftVector>> truncated;

  std::optional<int> index_of(const ShiftVector& v) const;
};

/// T(i) = (l(i, j))_j, the least element of the component containing P(i).
ShiftVector minimal_lk(const LMatrix& l, Vertex i);

/// All v in L(Q) with v_i = r, in lexicographic order.
std::vector<ShiftVector> enumerate_lk(const LMatrix& l, Vertex i, Shift r);

/// Single-increment edges among nodes (every node must lie in L(Q)).
/// With check_covers, the edges are recomputed from the order itself and a
/// mismatch raises InternalError.
HasseGraph hasse_edges(const LMatrix& l, std::vector<ShiftVector> nodes,
                       std::optional<Vertex> component_vertex = std::nullopt,
                       bool check_covers = false);

/// Cover relations of (nodes, >=^op) by direct comparison: (u, v) with
/// u < v componentwise and nothing strictly between.
std::vector<std::pair<int, int>> cover_relations(const std::vector<ShiftVector>& nodes);

/// Every v in L(Q) with v_s <= max_shift, s the unique source, grouped by
/// v_s and lexicographic within a group.
HasseGraph tp_window(const Quiver& q, Shift max_shift, bool check_covers = false);

struct AssertionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;  // counterexample on failure
};

struct TheoremReport {
  std::vector<AssertionResult> assertions;
  bool passed() const;
};

/// Check the six structural assertions on tp_window(q, max_shift).
/// Needs a unique source, minimum degree 2, and max_shift >= 2.
TheoremReport verify_theorem_t(const Quiver& q, Shift max_shift);

struct IdealReport {
  Vertex source = 0;
  std::vector<std::vector<Vertex>> ideals;  // downward closed subsets of Q0 \ {s}
  std::vector<ShiftVector> vectors;         // r_I: 0 on I, 1 off I, 0 at s
  bool matches_enumeration = false;         // image == enumerate_lk(s, 0)
  bool order_isomorphic = false;            // I subset J <=> r_J <= r_I
};

/// Order ideals of the path order on the non-source vertices and their
/// shift vectors. Requires the completion class and at least two vertices.
IdealReport order_ideals(const Quiver& q);

/// Ext vanishes between every pair of summands of v, and every decrement of
/// one coordinate that leaves L(Q) creates a nonvanishing Ext. Returns the
/// first failure, or nothing.
std::optional<std::string> certify_tilting(const PreprojOracle& oracle, const LMatrix& l,
                                           const ShiftVector& v);

/// Nodes at directed distance <= radius from `root`, with the edges among
/// them, as a quiver on 0..k-1 (nodes kept in window order).
Quiver top_ball(const HasseGraph& g, int root, int radius);

}  // namespace tiltlab
