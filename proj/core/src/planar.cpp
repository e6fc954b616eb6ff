#include "denjoy/planar.hpp"

#include <algorithm>

#include "denjoy/errors.hpp"
#include "denjoy/sampling.hpp"

namespace denjoy {

Fixed default_pi_coefficient(int /*k*/, std::int64_t n, int bits) {
  return Fixed::from_ratio(1, (n < 0 ? -n : n) + 1, bits);
}

AdmissibleMap::AdmissibleMap(DenjoyMap f)
    : AdmissibleMap(f, default_pi_coefficient, Fixed::from_ratio(1, 4, f.bits())) {}

AdmissibleMap::AdmissibleMap(DenjoyMap f, PiCoefficient coefficient, Fixed cap)
    : f_(std::move(f)), coefficient_(std::move(coefficient)), cap_(std::move(cap)), scale_(f_.bits()) {
  if (!coefficient_) throw std::invalid_argument("missing pi coefficient");
  const int b = bits();
  if (!(Fixed(b) < cap_ && cap_ <= Fixed::from_ratio(1, 4, b))) {
    throw std::invalid_argument("pi cap must lie in (0, 1/4]");
  }
  const CantorApprox& c = f_.cantor();
  Fixed sup(b);
  for (int k = 0; k < c.m(); ++k) {
    for (std::int64_t n = -c.depth(); n <= c.depth(); ++n) {
      const Fixed v = coefficient_(k, n, b);
      if (!(Fixed(b) < v)) throw std::invalid_argument("pi coefficients must be positive");
      sup = max(sup, v);
    }
  }
  // The affine distance profile peaks at half the coefficient.
  scale_ = min(Fixed::from_int(1, b), cap_ * 2 / sup);
}

Fixed AdmissibleMap::coefficient(const OrbitIndex& idx) const { return coefficient_(idx.k, idx.n, bits()); }

BumpValue AdmissibleMap::bump(const CirclePoint& theta, double eps) const {
  const CantorApprox& c = f_.cantor();
  const Fixed tol = c.require_tolerance(eps);
  const int b = bits();

  // Sup of the bump over every gap shorter than eps.
  Fixed unresolved(b);
  for (std::int64_t n = 0; n <= c.depth() + 1; ++n) {
    if (c.gap_length({0, n}) >= tol) continue;
    for (int k = 0; k < c.m(); ++k) {
      unresolved = max(unresolved, max(coefficient_(k, n, b), coefficient_(k, -n, b)));
    }
  }
  unresolved = unresolved * scale_ / 2;

  const auto loc = c.locate(theta.angle());
  if (!loc.in_gap) return {Fixed(b), unresolved};
  const GapEntry& e = c.entries()[static_cast<std::size_t>(loc.slot)];
  const Fixed y = theta.angle();
  const Fixed to_cantor = min(y - e.left, e.right - y);
  const Fixed value = to_cantor / e.length * coefficient(e.index) * scale_;
  return {value, e.length >= tol ? Fixed(b) : unresolved};
}

Fixed AdmissibleMap::radial_with(const Fixed& pi, const Fixed& rho) const {
  const int b = bits();
  const Fixed half = Fixed::from_ratio(1, 2, b);
  const Fixed one = Fixed::from_int(1, b);
  if (rho <= half) return rho / 2;
  if (rho <= one) return (Fixed::from_ratio(3, 4, b) - pi) * (rho * 2 - one) + Fixed::from_ratio(1, 4, b);
  return rho / 2 + half - pi;
}

Fixed AdmissibleMap::radial(const CirclePoint& theta, const Fixed& rho, double eps) const {
  if (rho.is_negative()) throw NegativeRadius("radius must be nonnegative");
  f_.cantor().require_tolerance(eps);
  if (rho <= Fixed::from_ratio(1, 2, bits())) return rho / 2;
  return radial_with(bump(theta, eps).value, rho);
}

PlanarPoint AdmissibleMap::step(const PlanarPoint& p, double eps) const {
  return PlanarPoint{f_.eval(p.theta, eps), radial(p.theta, p.rho, eps)};
}

PlanarTrace AdmissibleMap::planar_orbit(const PlanarPoint& p, int steps, double eps,
                                        std::optional<double> cap) const {
  if (p.rho.is_negative()) throw NegativeRadius("radius must be nonnegative");
  const OrbitTrace angular = f_.orbit(p.theta, steps, eps, cap);
  const int b = bits();
  const Fixed half = Fixed::from_ratio(1, 2, b);
  const Fixed one = Fixed::from_int(1, b);

  PlanarTrace trace;
  trace.points.reserve(angular.points.size());
  trace.lift_values = angular.lift_values;
  trace.points.push_back(p);
  trace.step_bounds.push_back(0.0);
  double rho_error = 0.0;
  for (int j = 1; j <= steps; ++j) {
    const PlanarPoint& prev = trace.points.back();
    Fixed rho(b);
    if (prev.rho <= half) {
      rho = prev.rho / 2;
      rho_error *= 0.5;
    } else {
      const BumpValue pi = bump(prev.theta, eps);
      rho = radial_with(pi.value, prev.rho);
      const double bump_error = pi.error_bound.to_double();
      if (prev.rho <= one) {
        rho_error = 2.0 * (0.75 - pi.value.to_double()) * rho_error + (2.0 * prev.rho.to_double() - 1.0) * bump_error;
      } else {
        rho_error = 0.5 * rho_error + bump_error;
      }
    }
    trace.error_bound = std::max(angular.step_bounds[static_cast<std::size_t>(j)], rho_error);
    if (cap && trace.error_bound > *cap) {
      throw ErrorBudgetExceeded("planar orbit error bound " + format_sci(trace.error_bound) +
                                " exceeds cap " + format_sci(*cap) + " at step " + std::to_string(j));
    }
    trace.points.push_back(PlanarPoint{angular.points[static_cast<std::size_t>(j)], rho});
    trace.step_bounds.push_back(trace.error_bound);
  }
  return trace;
}

Fixed planar_distance(const PlanarPoint& a, const PlanarPoint& b) {
  return max(dist_T(a.theta, b.theta), (a.rho - b.rho).abs());
}

Fixed AdmissibleMap::planar_equivariance_residual(int samples, double eps, std::uint64_t seed) const {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const int b = bits();
  const std::vector<CirclePoint> thetas = mixed_samples(f_.cantor(), samples, seed);
  Sampler radii(seed ^ 0x9e3779b97f4a7c15ULL, b);
  const Fixed fixed_radii[] = {Fixed(b),
                               Fixed::from_ratio(1, 4, b),
                               Fixed::from_ratio(1, 2, b),
                               Fixed::from_ratio(3, 4, b),
                               Fixed::from_int(1, b),
                               Fixed::from_ratio(3, 2, b)};
  Fixed worst(b);
  for (std::size_t s = 0; s < thetas.size(); ++s) {
    const std::size_t slot = s % 7;
    const Fixed rho = slot < 6 ? fixed_radii[slot] : radii.unit() * 2;
    const PlanarPoint p{thetas[s], rho};
    const PlanarPoint image = step(p, eps);
    for (int k = 1; k < m(); ++k) {
      const PlanarPoint rotated{rotate_fraction(p.theta, k, m()), p.rho};
      const PlanarPoint lhs = step(rotated, eps);
      const PlanarPoint rhs{rotate_fraction(image.theta, k, m()), image.rho};
      worst = max(worst, planar_distance(lhs, rhs));
    }
  }
  return worst;
}

}  // namespace denjoy
