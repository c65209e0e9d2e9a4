#include "tiltlab/ar_oracle.hpp"

#include <limits>

#include "checked.hpp"
#include "tiltlab/errors.hpp"

namespace tiltlab {

namespace {

struct Incidence {
  std::vector<std::vector<Vertex>> heads;  // heads[x]: t(alpha) for alpha in s(x)
  std::vector<std::vector<Vertex>> tails;  // tails[x]: s(beta) for beta in t(x)

  explicit Incidence(const Quiver& q) : heads(q.size()), tails(q.size()) {
    for (const auto& a : q.arrows()) {
      heads[a.source].push_back(a.target);
      tails[a.target].push_back(a.source);
    }
  }
};

std::string at_index(const char* what, Vertex a, std::int64_t m) {
  return std::string(what) + " base " + std::to_string(a) + ", m=" + std::to_string(m);
}

// One mesh step: value at m = x + rn (r >= 1) from already filled entries.
std::int64_t mesh(const IntVector& t, const Incidence& inc, int n, std::int64_t m,
                  const std::string& where) {
  const Vertex x = static_cast<Vertex>(m % n);
  const std::int64_t r = m / n;
  std::int64_t v = 0;
  for (Vertex y : inc.heads[x]) v = detail::add(v, t[y + r * n], where);
  for (Vertex z : inc.tails[x]) v = detail::add(v, t[z + (r - 1) * n], where);
  return detail::sub(v, t[x + (r - 1) * n], where);
}

void check_vertex(const Quiver& q, Vertex a) {
  if (a < 0 || a >= q.size()) throw ValidationError("vertex " + std::to_string(a) + " out of range");
}

void check_shift(Shift s) {
  if (s < 0) throw ValidationError("negative shift bound");
}

}  // namespace

void require_knittable(const Quiver& q) {
  if (!q.is_normalized()) throw ValidationError("quiver must be normalized (arrows i->j with i>j)");
  if (auto bad = min_degree_violation(q))
    throw PreconditionError("condition (b) fails at vertex " + std::to_string(*bad));
}

DimTable ext_table(const Quiver& q, Vertex a, Shift max_shift) {
  require_knittable(q);
  check_vertex(q, a);
  check_shift(max_shift);
  const int n = q.size();
  const Incidence inc(q);
  DimTable t{a, n, (max_shift + 2) * n, {}, {}};
  t.ext.assign(t.bound, 0);
  for (std::int64_t m = 0; m < t.bound; ++m) {
    if (m < a + n)
      t.ext[m] = 0;
    else if (m == a + n)
      t.ext[m] = 1;
    else
      t.ext[m] = mesh(t.ext, inc, n, m, at_index("ext table", a, m));
  }
  return t;
}

DimTable hom_table(const Quiver& q, Vertex a, Shift max_shift) {
  require_knittable(q);
  check_vertex(q, a);
  check_shift(max_shift);
  const int n = q.size();
  const Incidence inc(q);
  const auto paths = path_counts(q);
  DimTable t{a, n, (max_shift + 2) * n, {}, {}};
  t.hom.assign(t.bound, 0);
  for (std::int64_t m = 0; m < t.bound; ++m) {
    // Only the projective row can contain P(a) itself, so the
    // almost-split correction term never appears for m >= n.
    t.hom[m] = m < n ? paths[m][a] : mesh(t.hom, inc, n, m, at_index("hom table", a, m));
  }
  return t;
}

std::int64_t ext_dim(const Quiver& q, PreprojIndex a, PreprojIndex b) {
  check_vertex(q, a.vertex);
  check_vertex(q, b.vertex);
  if (a.shift < b.shift) {
    require_knittable(q);
    return 0;
  }
  const Shift d = a.shift - b.shift;
  return ext_table(q, b.vertex, d).ext[a.vertex + d * q.size()];
}

std::int64_t hom_dim(const Quiver& q, PreprojIndex a, PreprojIndex b) {
  check_vertex(q, a.vertex);
  check_vertex(q, b.vertex);
  if (a.shift > b.shift) {
    require_knittable(q);
    return 0;
  }
  const Shift d = b.shift - a.shift;
  return hom_table(q, a.vertex, d).hom[b.vertex + d * q.size()];
}

DimVectorTable dim_vectors(const Quiver& q, Shift max_shift) {
  require_knittable(q);
  check_shift(max_shift);
  const int n = q.size();
  const Incidence inc(q);
  const auto paths = path_counts(q);
  DimVectorTable t{n, max_shift, {}};
  const std::int64_t bound = (max_shift + 1) * n;
  t.vectors.assign(bound, IntVector(n, 0));
  for (std::int64_t m = 0; m < bound; ++m) {
    if (m < n) {
      t.vectors[m] = paths[m];
      continue;
    }
    const Vertex x = static_cast<Vertex>(m % n);
    const std::int64_t r = m / n;
    const std::string where = "dimension vector m=" + std::to_string(m);
    IntVector v(n, 0);
    for (int c = 0; c < n; ++c) {
      for (Vertex y : inc.heads[x]) v[c] = detail::add(v[c], t.vectors[y + r * n][c], where);
      for (Vertex z : inc.tails[x]) v[c] = detail::add(v[c], t.vectors[z + (r - 1) * n][c], where);
      v[c] = detail::sub(v[c], t.vectors[x + (r - 1) * n][c], where);
    }
    t.vectors[m] = std::move(v);
  }
  return t;
}

std::int64_t euler_form(const Quiver& q, const IntVector& d, const IntVector& e) {
  const auto n = static_cast<std::size_t>(q.size());
  if (d.size() != n || e.size() != n)
    throw ValidationError("Euler form needs vectors of length " + std::to_string(n));
  // Products of two 64-bit entries are accumulated exactly; only the result
  // has to fit.
  __int128 v = 0;
  bool bad = false;
  auto acc = [&](std::int64_t x, std::int64_t y, bool negate) {
    __int128 p = static_cast<__int128>(x) * y;
    bad |= negate ? __builtin_sub_overflow(v, p, &v) : __builtin_add_overflow(v, p, &v);
  };
  for (std::size_t i = 0; i < n; ++i) acc(d[i], e[i], false);
  for (const auto& a : q.arrows()) acc(d[a.source], e[a.target], true);
  if (bad || v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("64-bit overflow at Euler form");
  return static_cast<std::int64_t>(v);
}

IntVector apply(const IntMatrix& m, const IntVector& v) {
  IntVector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out[i] = detail::add(out[i], detail::mul(m[i][j], v[j], "matrix product"), "matrix product");
  return out;
}

CartanData cartan_data(const Quiver& q) {
  if (!q.is_normalized()) throw ValidationError("quiver must be normalized (arrows i->j with i>j)");
  const int n = q.size();
  const auto paths = path_counts(q);
  CartanData cd;
  cd.cartan.assign(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cd.cartan[j][i] = paths[i][j];

  // Upper unitriangular: back substitution, one column at a time.
  const std::string where = "Cartan inverse";
  cd.cartan_inv.assign(n, IntVector(n, 0));
  for (int k = 0; k < n; ++k) {
    for (int i = n - 1; i >= 0; --i) {
      std::int64_t v = i == k ? 1 : 0;
      for (int j = i + 1; j < n; ++j)
        v = detail::sub(v, detail::mul(cd.cartan[i][j], cd.cartan_inv[j][k], where), where);
      cd.cartan_inv[i][k] = v;
    }
  }

  cd.coxeter_inv.assign(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::int64_t v = 0;
      for (int k = 0; k < n; ++k)
        v = detail::add(v, detail::mul(cd.cartan[i][k], cd.cartan_inv[j][k], where), where);
      cd.coxeter_inv[i][j] = -v;
    }
  }
  return cd;
}

PreprojOracle::PreprojOracle(const Quiver& q, Shift max_shift)
    : q_(q), max_shift_(max_shift), dims_(dim_vectors(q, max_shift)), cartan_(cartan_data(q)) {
  for (Vertex a = 0; a < q.size(); ++a) {
    DimTable t = ext_table(q, a, max_shift);
    t.hom = hom_table(q, a, max_shift).hom;
    tables_.push_back(std::move(t));
  }
}

std::int64_t PreprojOracle::ext_dim(PreprojIndex a, PreprojIndex b) const {
  if (a.shift < b.shift) return 0;
  const Shift d = a.shift - b.shift;
  if (d > max_shift_) throw ValidationError("shift difference exceeds the knitted window");
  return tables_[b.vertex].ext[a.vertex + d * q_.size()];
}

std::int64_t PreprojOracle::hom_dim(PreprojIndex a, PreprojIndex b) const {
  if (a.shift > b.shift) return 0;
  const Shift d = b.shift - a.shift;
  if (d > max_shift_) throw ValidationError("shift difference exceeds the knitted window");
  return tables_[a.vertex].hom[b.vertex + d * q_.size()];
}

ConsistencyReport check_consistency(const Quiver& q, Shift max_shift) {
  const PreprojOracle oracle(q, max_shift);
  const LMatrix l = l_matrix(q);
  const int n = q.size();
  ConsistencyReport rep;
  auto fail = [&rep](bool& flag, const std::string& msg) {
    flag = false;
    if (!rep.first_failure) rep.first_failure = msg;
  };

  for (Vertex a = 0; a < n; ++a) {
    const auto& t = oracle.table(a);
    for (std::int64_t m = 0; m < t.bound; ++m) {
      if ((m < a + n && t.ext[m] != 0) || (m == a + n && t.ext[m] != 1) || t.ext[m] < 0)
        fail(rep.base_cases, "ext base case, base " + std::to_string(a) + " m=" + std::to_string(m));
      if (m + n < t.bound && t.ext[m + n] != t.hom[m])
        fail(rep.duality, "d_a(m+n) != h_a(m), base " + std::to_string(a) + " m=" + std::to_string(m));
    }
    for (const auto& arr : q.arrows()) {
      for (std::int64_t r = 0; arr.target + (r + 1) * n < t.bound; ++r) {
        const auto lo = t.ext[arr.target + r * n];
        const auto mid = t.ext[arr.source + r * n];
        const auto hi = t.ext[arr.target + (r + 1) * n];
        if (!(lo <= mid && mid <= hi))
          fail(rep.monotone, "monotonicity, base " + std::to_string(a) + " arrow " +
                                 std::to_string(arr.source) + "->" + std::to_string(arr.target) +
                                 " r=" + std::to_string(r));
      }
    }
  }

  for (Vertex i = 0; i < n; ++i) {
    for (Shift r = 0; r <= max_shift; ++r) {
      const PreprojIndex x{i, r};
      for (Vertex j = 0; j < n; ++j) {
        for (Shift s = 0; s <= max_shift; ++s) {
          const PreprojIndex y{j, s};
          const auto ext = oracle.ext_dim(x, y);
          const auto hom = oracle.hom_dim(x, y);
          const auto form = euler_form(q, oracle.dims().at(x), oracle.dims().at(y));
          const std::string pair = "(" + std::to_string(i) + "," + std::to_string(r) + "),(" +
                                   std::to_string(j) + "," + std::to_string(s) + ")";
          if (hom - ext != form) fail(rep.euler, "hom - ext != Euler form at " + pair);
          if ((ext == 0) != ext_vanishes(l, x, y)) fail(rep.criterion, "criterion mismatch at " + pair);
        }
      }
    }
  }

  const auto& phi_inv = oracle.cartan().coxeter_inv;
  for (Vertex x = 0; x < n; ++x) {
    IntVector v = oracle.dims().at({x, 0});
    for (Shift r = 1; r <= max_shift; ++r) {
      v = apply(phi_inv, v);
      if (v != oracle.dims().at({x, r}))
        fail(rep.coxeter, "Coxeter image differs at (" + std::to_string(x) + "," + std::to_string(r) + ")");
    }
  }
  return rep;
}

}  // namespace tiltlab
