#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tiltlab/ext_metric.hpp"
#include "tiltlab/quiver.hpp"

namespace tiltlab {

using CubeNode = std::vector<int>;  // entries 0/1

// Full subquiver of the cube quiver C^dim on a set of 0/1 vectors. Nodes are
// kept sorted; edges are the single-bit increments u -> u + e_i between
// nodes, listed by (u, i).
class CubeSubquiver {
 public:
  CubeSubquiver() = default;
  /// Throws ValidationError on a wrong length or a non 0/1 entry.
  CubeSubquiver(int dim, std::vector<CubeNode> nodes);

  int dim() const { return dim_; }
  const std::vector<CubeNode>& nodes() const { return nodes_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::optional<int> index_of(const CubeNode& v) const;
  bool contains(const CubeNode& v) const { return index_of(v).has_value(); }

  /// The node/edge graph as a quiver on 0..|nodes|-1.
  Quiver as_quiver() const;

  friend bool operator==(const CubeSubquiver& a, const CubeSubquiver& b) {
    return a.dim_ == b.dim_ && a.nodes_ == b.nodes_;
  }

 private:
  int dim_ = 0;
  std::vector<CubeNode> nodes_;
  std::vector<std::pair<int, int>> edges_;
};

std::string to_string(const CubeNode& v);

enum class AmalgamMode { corrected, literal };

/// Add one arrow x -> y for every source x that is not a sink and every
/// sink y that is not a source, parallel arrows included.
Quiver complete(const Quiver& q);

/// Vertices of `lower` keep their labels, those of `upper` move up by
/// |lower|. Corrected mode joins each sink of `upper` to each source of
/// `lower`; literal mode joins sources of `upper` to sinks of `lower`.
/// Labels are otherwise untouched, so normalized inputs give a normalized
/// result.
Quiver amalgam(const Quiver& upper, const Quiver& lower, AmalgamMode mode = AmalgamMode::corrected);

struct PhiResult {
  Quiver quiver;
  bool in_A_circ = false;
};

/// complete(amalgam(q1, q2)). Inputs must be in the completion class; the
/// class of the result is reported.
PhiResult phi(const Quiver& q1, const Quiver& q2, AmalgamMode mode = AmalgamMode::corrected);

/// The component of the source projective as a subquiver of C^{n-1}. The
/// coordinates are the non-source vertices in increasing order; the point
/// maps to the single node of C^0.
CubeSubquiver psi(const Quiver& q);

struct MeetJoin {
  CubeNode plus;   // componentwise min
  CubeNode minus;  // componentwise max
};
MeetJoin meet_join(const CubeNode& a, const CubeNode& b);

enum class LCondition { none, corners, paths, closure, unique_source_sink };
const char* describe(LCondition c);

struct LMembership {
  bool member = false;
  LCondition failed = LCondition::none;
};

/// Corner nodes, paths between comparable nodes, closure under meet_join,
/// then connectedness with a unique source and sink, in that order.
LMembership is_in_script_L(const CubeSubquiver& k);

/// Hasse quiver of the coordinate order of k with a new source on top,
/// completed. Vertex d = dim is the new source; coordinates keep their
/// indices.
Quiver psi_inverse(const CubeSubquiver& k);

/// Ids of the arrows a reduction step may remove, ordered by
/// (source, target, id). Does not check the completion class.
std::vector<int> eligible_arrows(const Quiver& q);

/// q minus its first eligible arrow, or nothing when q is reduced.
std::optional<Quiver> leadsto_step(const Quiver& q);

/// Reduce to a fixpoint, always taking the first eligible arrow.
Quiver normal_form(const Quiver& q);

/// Reduce to a fixpoint, removing a uniformly chosen eligible arrow each time.
Quiver random_normal_form(const Quiver& q, std::mt19937_64& rng);

struct Equivalence {
  bool equivalent = false;
  bool labeled = false;  // normal forms agree vertex for vertex
};

/// Normal forms agree up to relabelling.
Equivalence equivalent(const Quiver& a, const Quiver& b);

/// Coordinates [first, glue, second]; first's nodes padded with zeros, then
/// (1..1, 1, y) for every node y of second.
CubeSubquiver cube_amalgam(const CubeSubquiver& first, const CubeSubquiver& second);

struct CubePiece {
  CubeSubquiver cube;
  std::vector<int> coords;  // ambient coordinate of each local coordinate
};

struct DecompositionSeq {
  int dim = 0;
  std::vector<CubePiece> pieces;
  std::vector<int> glue;  // glue[t] joins pieces t and t+1
};

/// Split k at an edge T -> T + e_g with every node below T or above
/// T + e_g. Maximal mode splits the parts again until nothing splits.
DecompositionSeq decompose(const CubeSubquiver& k, bool maximal = true);

/// Amalgamate the pieces back in order.
CubeSubquiver recompose(const DecompositionSeq& seq);

/// Graph isomorphism of the node/edge graphs.
bool cube_isomorphic(const CubeSubquiver& a, const CubeSubquiver& b);

struct CommuteReport {
  CubeSubquiver lhs;  // psi(phi(q1, q2)) in the coordinates of rhs
  CubeSubquiver rhs;  // cube_amalgam(psi(q2), psi(q1))
  bool equal = false;
};

/// Throws PreconditionError when an input or phi(q1, q2) leaves the class.
CommuteReport verify_commute(const Quiver& q1, const Quiver& q2,
                             AmalgamMode mode = AmalgamMode::corrected);

struct SameTpReport {
  bool same = false;
  std::size_t pieces1 = 0;
  std::size_t pieces2 = 0;
  std::size_t period = 0;
  std::optional<bool> windows_isomorphic;  // set when verified
};

/// Periodicity test on maximal decompositions. With verify, the balls of
/// radius max_shift around the least window node are compared as graphs;
/// a positive algebraic answer with non-isomorphic balls is an InternalError.
SameTpReport same_tp(const Quiver& q1, const Quiver& q2, bool verify = false, Shift max_shift = 3);

}  // namespace tiltlab
