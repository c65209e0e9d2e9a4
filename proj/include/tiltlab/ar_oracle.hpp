#pragma once

// Dimension data of the preprojective component, computed by knitting
// meshes of ZQ. This is the ground truth the combinatorial criterion and the
// tilting enumeration are checked against.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiltlab/ext_metric.hpp"
#include "tiltlab/quiver.hpp"

namespace tiltlab {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// Knitted values over flat indices m in [0, bound) for one base vertex a.
///   ext[m] = dim Ext^1(P(m), P(a))
///   hom[m] = dim Hom(P(a), P(m))
/// Either vector may be empty when only the other was requested.
struct DimTable {
  Vertex base = 0;
  int n = 0;
  std::int64_t bound = 0;
  IntVector ext;
  IntVector hom;
};

/// Throws ValidationError unless q is normalized, PreconditionError unless
/// every vertex has degree >= 2.
void require_knittable(const Quiver& q);

/// Fills ext for m < (max_shift + 2) * n with the mesh recurrence
///   0 below a+n, 1 at a+n, otherwise
///   sum_{x->y} d(y + rn) + sum_{z->x} d(z + (r-1)n) - d(x + (r-1)n).
DimTable ext_table(const Quiver& q, Vertex a, Shift max_shift);

/// Fills hom for m < (max_shift + 2) * n. Row r = 0 holds the path counts
/// x -> a; later rows follow the same mesh recurrence.
DimTable hom_table(const Quiver& q, Vertex a, Shift max_shift);

/// dim Ext^1(tau^{-r} P(i), tau^{-s} P(j)).
std::int64_t ext_dim(const Quiver& q, PreprojIndex a, PreprojIndex b);
/// dim Hom(tau^{-r} P(i), tau^{-s} P(j)).
std::int64_t hom_dim(const Quiver& q, PreprojIndex a, PreprojIndex b);

/// Dimension vectors of tau^{-r} P(x) for r <= max_shift, indexed by flat m.
struct DimVectorTable {
  int n = 0;
  Shift max_shift = 0;
  std::vector<IntVector> vectors;
  const IntVector& at(PreprojIndex p) const { return vectors[p.flat(n)]; }
};

DimVectorTable dim_vectors(const Quiver& q, Shift max_shift);

/// <d, e> = sum_i d_i e_i - sum_{arrows i->j} d_i e_j.
std::int64_t euler_form(const Quiver& q, const IntVector& d, const IntVector& e);

struct CartanData {
  IntMatrix cartan;        // cartan[j][i] = #paths i -> j; column i is dim P(i)
  IntMatrix cartan_inv;
  IntMatrix coxeter_inv;   // -C (C^{-1})^T; sends dim M to dim tau^{-1} M
};

CartanData cartan_data(const Quiver& q);

IntVector apply(const IntMatrix& m, const IntVector& v);

/// All knitted tables of a quiver up to a shift bound, built once and then
/// queried. ext/hom queries need |r - s| <= max_shift.
class PreprojOracle {
 public:
  PreprojOracle(const Quiver& q, Shift max_shift);

  const Quiver& quiver() const { return q_; }
  Shift max_shift() const { return max_shift_; }
  const DimTable& table(Vertex a) const { return tables_[a]; }
  const DimVectorTable& dims() const { return dims_; }
  const CartanData& cartan() const { return cartan_; }

  std::int64_t ext_dim(PreprojIndex a, PreprojIndex b) const;
  std::int64_t hom_dim(PreprojIndex a, PreprojIndex b) const;

 private:
  Quiver q_;
  Shift max_shift_;
  std::vector<DimTable> tables_;
  DimVectorTable dims_;
  CartanData cartan_;
};

struct ConsistencyReport {
  bool base_cases = true;    // d(m) = 0 below a+n, d(a+n) = 1
  bool monotone = true;      // d(y+rn) <= d(x+rn) <= d(y+(r+1)n) for x->y
  bool euler = true;         // hom - ext = <dim, dim> on every pair
  bool duality = true;       // d_a(m + n) = h_a(m)
  bool criterion = true;     // ext == 0 <=> r <= s + l(j, i)
  bool coxeter = true;       // knitted dims = iterated inverse Coxeter images
  std::optional<std::string> first_failure;

  bool passed() const {
    return base_cases && monotone && euler && duality && criterion && coxeter;
  }
};

/// Cross-check every pair of preprojective indices with shifts <= max_shift.
ConsistencyReport check_consistency(const Quiver& q, Shift max_shift);

}  // namespace tiltlab
