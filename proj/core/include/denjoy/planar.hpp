#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "denjoy/denjoy_map.hpp"

namespace denjoy {

/// Polar point; the origin is rho = 0 with any theta.
struct PlanarPoint {
  CirclePoint theta;
  Fixed rho;
};

/// Amplitude of the bump on gap (k,n), before the global cap rescale.
using PiCoefficient = std::function<Fixed(int k, std::int64_t n, int bits)>;

/// 1/(|n|+1): positive, vanishing as |n| grows, and the same for every k so
/// that the bump is invariant under R_{1/m}.
Fixed default_pi_coefficient(int k, std::int64_t n, int bits);

struct BumpValue {
  Fixed value;
  /// Zero for points resolved inside a gap of length >= eps; otherwise the
  /// largest value the bump takes on any gap shorter than eps.
  Fixed error_bound;
};

struct PlanarTrace {
  std::vector<PlanarPoint> points;
  std::vector<Fixed> lift_values;
  double error_bound = 0.0;
  /// Bound after each step; entry 0 is the start.
  std::vector<double> step_bounds;
};

/// The planar map h(θ, ρ) = (f(θ), R(θ, ρ)) with
///
///   R = ρ/2                         for ρ <= 1/2
///       (3/4 - Π(θ))(2ρ - 1) + 1/4  for 1/2 < ρ <= 1
///       ρ/2 + 1/2 - Π(θ)            for ρ > 1
///
/// and Π(θ) = coefficient(k,n) * dist_T(θ, C) / length on gap (k,n), zero on
/// the Cantor set. All coefficients share one factor chosen so sup Π <= cap.
class AdmissibleMap {
 public:
  /// Throws std::invalid_argument unless 0 < cap <= 1/4.
  AdmissibleMap(DenjoyMap f, PiCoefficient coefficient, Fixed cap);
  explicit AdmissibleMap(DenjoyMap f);

  const DenjoyMap& circle_map() const { return f_; }
  int bits() const { return f_.bits(); }
  int m() const { return f_.m(); }
  /// Global rescale applied to every coefficient.
  const Fixed& pi_scale() const { return scale_; }
  Fixed coefficient(const OrbitIndex& idx) const;

  BumpValue bump(const CirclePoint& theta, double eps) const;
  /// Throws NegativeRadius for rho < 0.
  Fixed radial(const CirclePoint& theta, const Fixed& rho, double eps) const;
  PlanarPoint step(const PlanarPoint& p, double eps) const;
  PlanarTrace planar_orbit(const PlanarPoint& p, int steps, double eps,
                           std::optional<double> cap = std::nullopt) const;
  /// The three-branch radial formula for a given bump value.
  Fixed radial_with(const Fixed& pi, const Fixed& rho) const;

  /// max over samples and k = 1..m-1 of the product-metric distance
  /// max(dist_T, |Δρ|) between h(R_{k/m} p) and R_{k/m} h(p).
  Fixed planar_equivariance_residual(int samples, double eps, std::uint64_t seed = 1) const;

 private:
  DenjoyMap f_;
  PiCoefficient coefficient_;
  Fixed cap_;
  Fixed scale_;
};

/// max(dist_T(θ_a, θ_b), |ρ_a - ρ_b|).
Fixed planar_distance(const PlanarPoint& a, const PlanarPoint& b);

}  // namespace denjoy
