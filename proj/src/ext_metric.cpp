#include "tiltlab/ext_metric.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "tiltlab/errors.hpp"

namespace tiltlab {

bool ShiftVector::componentwise_le(const ShiftVector& other) const {
  if (size() != other.size()) throw ValidationError("shift vectors of different length");
  for (std::size_t i = 0; i < size(); ++i)
    if (r_[i] > other.r_[i]) return false;
  return true;
}

ShiftVector ShiftVector::plus_unit(std::size_t i) const {
  ShiftVector v = *this;
  ++v.r_[i];
  return v;
}

ShiftVector ShiftVector::translated(Shift t) const {
  ShiftVector v = *this;
  for (auto& x : v.r_) x += t;
  return v;
}

std::string ShiftVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r_[i]);
  }
  return s + ")";
}

LMatrix::LMatrix(int n, std::vector<int> values, bool min_degree_ok)
    : n_(n), l_(std::move(values)), min_degree_ok_(min_degree_ok) {
  if (l_.size() != static_cast<std::size_t>(n) * n)
    throw ValidationError("l-matrix needs n*n entries");
}

std::vector<int> LMatrix::row(Vertex i) const {
  return {l_.begin() + i * n_, l_.begin() + (i + 1) * n_};
}

LMatrix l_matrix(const Quiver& q) {
  const int n = q.size();
  const auto g = doubled(q);
  std::vector<std::vector<WeightedArc>> out(n);
  for (const auto& arc : g.arcs) out[arc.from].push_back(arc);

  constexpr int unreached = std::numeric_limits<int>::max();
  std::vector<int> values(static_cast<std::size_t>(n) * n, unreached);
  std::vector<int> dist(n);
  for (Vertex src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), unreached);
    std::deque<Vertex> dq{src};
    dist[src] = 0;
    while (!dq.empty()) {
      Vertex u = dq.front();
      dq.pop_front();
      for (const auto& arc : out[u]) {
        int d = dist[u] + arc.weight;
        if (d >= dist[arc.to]) continue;
        dist[arc.to] = d;
        if (arc.weight == 0)
          dq.push_front(arc.to);
        else
          dq.push_back(arc.to);
      }
    }
    for (Vertex j = 0; j < n; ++j) {
      if (dist[j] == unreached)
        throw ValidationError("quiver is disconnected: no walk from " + std::to_string(src) +
                              " to " + std::to_string(j));
      values[src * n + j] = dist[j];
    }
  }
  bool degree_ok = true;
  for (Vertex x = 0; x < n; ++x) degree_ok = degree_ok && q.degree(x) >= 2;
  return LMatrix(n, std::move(values), degree_ok);
}

int l_max(const LMatrix& l) {
  int best = 0;
  for (Vertex i = 0; i < l.size(); ++i)
    for (Vertex j = 0; j < l.size(); ++j) best = std::max(best, l(i, j));
  return best;
}

bool ext_vanishes(const LMatrix& l, PreprojIndex a, PreprojIndex b) {
  if (!l.min_degree_ok())
    throw PreconditionError("Ext criterion needs #s(x)+#t(x) > 1 at every vertex");
  if (a.vertex < 0 || a.vertex >= l.size() || b.vertex < 0 || b.vertex >= l.size())
    throw ValidationError("preprojective index vertex out of range");
  if (a.shift < 0 || b.shift < 0) throw ValidationError("negative translation shift");
  return a.shift <= b.shift + l(b.vertex, a.vertex);
}

bool in_L(const LMatrix& l, const ShiftVector& v) {
  const int n = l.size();
  if (static_cast<int>(v.size()) != n)
    throw ValidationError("shift vector has length " + std::to_string(v.size()) + ", expected " +
                          std::to_string(n));
  for (Vertex i = 0; i < n; ++i)
    if (v[i] < 0) throw ValidationError("negative entry in shift vector");
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (v[j] > v[i] + l(i, j)) return false;
  return true;
}

}  // namespace tiltlab
