#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "denjoy/cantor.hpp"

namespace denjoy {

struct OrbitTrace {
  CirclePoint start;
  std::vector<CirclePoint> points;
  std::vector<Fixed> lift_values;
  /// steps * eps * K, K the largest affine slope met along the orbit.
  double error_bound = 0.0;
  /// Bound after each step; entry 0 is the start.
  std::vector<double> step_bounds;
};

struct RotationEstimate {
  Fixed estimate;
  /// 1/N plus the accumulated evaluation error.
  double bound = 0.0;
  double accumulated_error = 0.0;
  std::int64_t steps = 0;
};

/// (F^N(x0) - x0) / N for a lift F. The a-priori bound 1/N holds for any
/// lift of an orientation-preserving circle homeomorphism.
template <class Lift>
RotationEstimate estimate_rotation_number(Lift&& lift, const Fixed& x0, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("rotation number needs N >= 1");
  Fixed x = x0;
  for (std::int64_t i = 0; i < N; ++i) x = lift(x);
  return RotationEstimate{(x - x0) / N, 1.0 / static_cast<double>(N), 0.0, N};
}

/// The Z_m-equivariant Denjoy homeomorphism built on a CantorApprox.
///
/// On a gap (k,n) the map is the affine bijection onto gap (k,n+1), slope
/// w_{n+1}/w_n. Elsewhere f = a ∘ R_τ ∘ P. The outermost gaps |n| = depth
/// have no materialized successor and are sent through the second branch.
class DenjoyMap {
 public:
  explicit DenjoyMap(std::shared_ptr<const CantorApprox> cantor);
  explicit DenjoyMap(CantorParams params);

  const CantorApprox& cantor() const { return *cantor_; }
  std::shared_ptr<const CantorApprox> cantor_ptr() const { return cantor_; }
  const Fixed& tau() const { return cantor_->params().tau; }
  int m() const { return cantor_->m(); }
  int bits() const { return cantor_->bits(); }

  CirclePoint eval(const CirclePoint& y, double eps) const;
  /// Lift with F(x+1) = F(x) + 1 and F([0,1)) = [F(0), F(0)+1).
  Fixed lift_eval(const Fixed& x, double eps) const;

  /// Affine slope on gap idx.
  Fixed slope(const OrbitIndex& idx) const;

  /// Throws ErrorBudgetExceeded when error_bound would exceed `cap`.
  OrbitTrace orbit(const CirclePoint& y, int steps, double eps, std::optional<double> cap = std::nullopt) const;
  RotationEstimate rotation_number(const CirclePoint& y, std::int64_t N, double eps,
                                   std::optional<double> cap = std::nullopt) const;

  /// max dist_T(f(R_{1/m} y), R_{1/m} f(y)) over mixed samples.
  Fixed equivariance_residual(int samples, double eps, std::uint64_t seed = 1) const;
  /// max dist_T(P(f(y)), R_τ P(y)) over mixed samples.
  Fixed semiconjugacy_residual(int samples, double eps, std::uint64_t seed = 1) const;

 private:
  struct Image {
    Fixed lift;
    Fixed slope;
  };
  Image image(const Fixed& y) const;

  std::shared_ptr<const CantorApprox> cantor_;
};

}  // namespace denjoy
