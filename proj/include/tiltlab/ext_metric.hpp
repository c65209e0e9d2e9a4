#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tiltlab/quiver.hpp"

namespace tiltlab {

using Shift = std::int64_t;

/// Translation shifts (r_i) of a candidate module sum_i tau^{-r_i} P(i).
class ShiftVector {
 public:
  ShiftVector() = default;
  explicit ShiftVector(std::vector<Shift> r) : r_(std::move(r)) {}
  ShiftVector(std::initializer_list<Shift> r) : r_(r) {}

  std::size_t size() const { return r_.size(); }
  Shift operator[](std::size_t i) const { return r_[i]; }
  Shift& operator[](std::size_t i) { return r_[i]; }
  const std::vector<Shift>& values() const { return r_; }

  /// Componentwise r_i <= other_i. In the tilting order this means
  /// the module of *this is >= the module of other.
  bool componentwise_le(const ShiftVector& other) const;
  ShiftVector plus_unit(std::size_t i) const;
  ShiftVector translated(Shift t) const;  // adds t to every entry
  std::string to_string() const;          // "(1,0,2)"

  friend bool operator==(const ShiftVector&, const ShiftVector&) = default;
  friend auto operator<=>(const ShiftVector& a, const ShiftVector& b) {
    return a.r_ <=> b.r_;
  }

 private:
  std::vector<Shift> r_;
};

/// Flat preprojective index m = x + r*n for tau^{-r} P(x).
struct PreprojIndex {
  Vertex vertex = 0;
  Shift shift = 0;

  std::int64_t flat(int n) const { return vertex + shift * n; }
  static PreprojIndex from_flat(std::int64_t m, int n) {
    return {static_cast<Vertex>(m % n), m / n};
  }
  friend bool operator==(const PreprojIndex&, const PreprojIndex&) = default;
};

// Table of l_Q(i, j): the least number of forward arrows on a walk from i to
// j in the doubled quiver. Also records whether the quiver met the
// minimum-degree condition, which gates the Ext criterion.
class LMatrix {
 public:
  LMatrix(int n, std::vector<int> values, bool min_degree_ok);

  int size() const { return n_; }
  int operator()(Vertex i, Vertex j) const { return l_[i * n_ + j]; }
  std::vector<int> row(Vertex i) const;
  bool min_degree_ok() const { return min_degree_ok_; }

 private:
  int n_;
  std::vector<int> l_;
  bool min_degree_ok_;
};

/// 0/1 breadth-first search from every vertex of doubled(q).
/// Throws ValidationError if some pair is unreachable (q disconnected).
LMatrix l_matrix(const Quiver& q);

int l_max(const LMatrix& l);

/// Ext^1(tau^{-r} P(i), tau^{-s} P(j)) = 0 iff r <= s + l(j, i).
/// Throws PreconditionError when the quiver fails the minimum-degree
/// condition, where the criterion is not established.
bool ext_vanishes(const LMatrix& l, PreprojIndex a, PreprojIndex b);

/// r_j <= r_i + l(i, j) for every ordered pair; the lattice L(Q).
/// Throws ValidationError on a length mismatch or negative entry.
bool in_L(const LMatrix& l, const ShiftVector& v);

}  // namespace tiltlab
