#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <variant>
#include <vector>

#include "denjoy/circle.hpp"
#include "denjoy/schedule.hpp"

namespace denjoy {

/// Names the orbit point φ + k/m + nτ and the gap attached to it.
struct OrbitIndex {
  int k = 0;
  std::int64_t n = 0;

  friend bool operator==(const OrbitIndex&, const OrbitIndex&) = default;
};

std::ostream& operator<<(std::ostream& os, const OrbitIndex& idx);

struct CantorParams {
  int m = 2;
  Fixed tau;
  Fixed phi;
  GapSchedule schedule;
  /// Largest |n| whose gaps are materialized.
  int depth = 128;

  int bits() const { return tau.bits(); }

  /// m=2, φ=0, τ=(√5-1)/2, geometric schedule with ratio 1/2 and mass 1.
  static CantorParams defaults(int bits = kDefaultPrecisionBits);
};

/// (√5-1)/2 at the given precision.
Fixed golden_tau(int bits);
/// √2-1 at the given precision.
Fixed sqrt2_minus_one(int bits);

struct InGap {
  OrbitIndex index;
  friend bool operator==(const InGap&, const InGap&) = default;
};
struct NearCantor {
  friend bool operator==(const NearCantor&, const NearCantor&) = default;
};
using Classification = std::variant<InGap, NearCantor>;

/// One materialized gap, in increasing order of its base point.
struct GapEntry {
  OrbitIndex index;
  Fixed base;
  Fixed left;
  Fixed right;
  Fixed length;
};

/// Finite-depth model of the Z_m-symmetric Cantor set.
///
/// Gaps are placed by the jump function
///
///   a(x) = sum_{d < x} l(d) + c * x,
///
/// summing over base points with |n| <= depth, where c = 1 - (total placed
/// gap length). The linear term spreads the unplaced mass uniformly so that
/// a(x + 1/m) = a(x) + 1/m holds exactly and a(1) = 1. Against the infinite
/// construction, every position is off by at most tail_bound(depth).
///
/// The Cantor function P is the inverse of a: constant on gaps, and the
/// linear inverse on the thin remainder between consecutive placed gaps.
/// For a point y near the Cantor set the returned x satisfies
/// |a(x) - y| <= resolution(); x itself can sit anywhere between the two
/// neighbouring base points, which is the best a finite model can do.
class CantorApprox {
 public:
  /// Throws PrecisionCollision when two base points with |n| <= depth
  /// coincide within comparison_tolerance, and DepthExceeded when the
  /// residual mass is below what the precision can resolve.
  explicit CantorApprox(CantorParams params);

  const CantorParams& params() const { return params_; }
  int m() const { return params_.m; }
  int depth() const { return params_.depth; }
  int bits() const { return params_.bits(); }

  CirclePoint base_point(const OrbitIndex& idx) const;
  Fixed gap_length(const OrbitIndex& idx) const;
  CirclePoint gap_left_endpoint(const OrbitIndex& idx, double eps) const;
  Arc gap(const OrbitIndex& idx, double eps) const;

  /// Closed arcs of A_j, each endpoint accurate to eps. stage(0) is the
  /// full circle.
  std::vector<Arc> stage(int j, double eps) const;

  CirclePoint cantor_function(const CirclePoint& y, double eps) const;
  Classification classify(const CirclePoint& y, double eps) const;

  /// 1 - sum_{|n| <= N} w_n.
  Fixed measure_remaining(int N) const;
  /// Smallest N with tail_bound(N) <= eps/2.
  int truncation_depth(double eps) const;

  /// Bound on the distance between any model quantity and its limit.
  Fixed resolution() const { return resolution_; }
  /// Throws DepthExceeded if eps is finer than resolution().
  Fixed require_tolerance(double eps) const;

  // Lower-level access used by the map modules.
  struct Location {
    bool in_gap = false;
    /// Gap slot, or the slot preceding the remainder (-1 before the first).
    std::ptrdiff_t slot = -1;
  };
  Location locate(const Fixed& y) const;
  /// P lifted to [0,1) -> [0,1].
  Fixed collapse(const Fixed& y) const;
  /// a on [0,1).
  Fixed embed(const Fixed& x) const;
  CirclePoint jump(const CirclePoint& x) const { return CirclePoint(embed(x.angle())); }

  const std::vector<GapEntry>& entries() const { return entries_; }
  bool in_model(const OrbitIndex& idx) const;
  const GapEntry& entry(const OrbitIndex& idx) const;
  const Fixed& residual_density() const { return density_; }

 private:
  std::size_t key(const OrbitIndex& idx) const;
  Fixed raw_base(const OrbitIndex& idx) const;

  CantorParams params_;
  std::vector<GapEntry> entries_;
  std::vector<std::size_t> slot_of_;
  std::vector<Fixed> level_length_;
  Fixed density_;
  Fixed resolution_;
};

}  // namespace denjoy
