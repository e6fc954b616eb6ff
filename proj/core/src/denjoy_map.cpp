#include "denjoy/denjoy_map.hpp"

#include "denjoy/errors.hpp"
#include "denjoy/sampling.hpp"

namespace denjoy {

DenjoyMap::DenjoyMap(std::shared_ptr<const CantorApprox> cantor) : cantor_(std::move(cantor)) {
  if (!cantor_) throw std::invalid_argument("null CantorApprox");
}

DenjoyMap::DenjoyMap(CantorParams params) : DenjoyMap(std::make_shared<const CantorApprox>(std::move(params))) {}

DenjoyMap::Image DenjoyMap::image(const Fixed& y) const {
  const CantorApprox& c = *cantor_;
  const int bits = c.bits();
  const Fixed one = Fixed::from_int(1, bits);
  const auto loc = c.locate(y);
  Fixed x(bits);
  if (loc.in_gap) {
    const GapEntry& src = c.entries()[static_cast<std::size_t>(loc.slot)];
    if (src.index.n < c.depth()) {
      const GapEntry& dst = c.entry({src.index.k, src.index.n + 1});
      const Fixed turn = src.base + tau() >= one ? one : Fixed(bits);
      // Normalize within the source gap first: products of two gap-sized
      // numbers would lose relative precision.
      const Fixed t = min(max((y - src.left) / src.length, Fixed(bits)), one);
      return {turn + dst.left + t * dst.length, dst.length / src.length};
    }
    x = src.base;
  } else {
    x = c.collapse(y);
  }
  const Fixed shifted = x + tau();
  const std::int64_t turn = shifted.floor();
  return {Fixed::from_int(turn, bits) + c.embed(shifted.frac()), one};
}

CirclePoint DenjoyMap::eval(const CirclePoint& y, double eps) const {
  cantor_->require_tolerance(eps);
  return CirclePoint(image(y.angle()).lift);
}

Fixed DenjoyMap::lift_eval(const Fixed& x, double eps) const {
  cantor_->require_tolerance(eps);
  return image(x.frac()).lift + Fixed::from_int(x.floor(), bits());
}

Fixed DenjoyMap::slope(const OrbitIndex& idx) const {
  if (cantor_->in_model(idx) && idx.n < cantor_->depth()) {
    return cantor_->entry({idx.k, idx.n + 1}).length / cantor_->entry(idx).length;
  }
  return cantor_->params().schedule.level_ratio(idx.n);
}

OrbitTrace DenjoyMap::orbit(const CirclePoint& y, int steps, double eps, std::optional<double> cap) const {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  cantor_->require_tolerance(eps);
  OrbitTrace trace{y, {y}, {y.angle()}, 0.0, {0.0}};
  trace.points.reserve(static_cast<std::size_t>(steps) + 1);
  trace.lift_values.reserve(static_cast<std::size_t>(steps) + 1);
  double max_slope = 1.0;
  Fixed x = y.angle();
  for (int i = 1; i <= steps; ++i) {
    Image img = image(x.frac());
    x = img.lift + Fixed::from_int(x.floor(), bits());
    max_slope = std::max(max_slope, img.slope.to_double());
    trace.error_bound = static_cast<double>(i) * eps * max_slope;
    if (cap && trace.error_bound > *cap) {
      throw ErrorBudgetExceeded("orbit error bound " + format_sci(trace.error_bound) + " exceeds cap " +
                                format_sci(*cap) + " at step " + std::to_string(i));
    }
    trace.points.emplace_back(x);
    trace.lift_values.push_back(x);
    trace.step_bounds.push_back(trace.error_bound);
  }
  return trace;
}

RotationEstimate DenjoyMap::rotation_number(const CirclePoint& y, std::int64_t N, double eps,
                                            std::optional<double> cap) const {
  cantor_->require_tolerance(eps);
  double max_slope = 1.0;
  auto lift = [&](const Fixed& x) {
    Image img = image(x.frac());
    max_slope = std::max(max_slope, img.slope.to_double());
    return img.lift + Fixed::from_int(x.floor(), bits());
  };
  RotationEstimate est = estimate_rotation_number(lift, y.angle(), N);
  est.accumulated_error = static_cast<double>(N) * eps * max_slope;
  est.bound += est.accumulated_error;
  if (cap && est.accumulated_error > *cap) {
    throw ErrorBudgetExceeded("rotation-number error bound " + format_sci(est.accumulated_error) +
                              " exceeds cap " + format_sci(*cap));
  }
  return est;
}

Fixed DenjoyMap::equivariance_residual(int samples, double eps, std::uint64_t seed) const {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  cantor_->require_tolerance(eps);
  Fixed worst(bits());
  for (const CirclePoint& y : mixed_samples(*cantor_, samples, seed)) {
    const CirclePoint lhs = eval(rotate_fraction(y, 1, m()), eps);
    const CirclePoint rhs = rotate_fraction(eval(y, eps), 1, m());
    worst = max(worst, dist_T(lhs, rhs));
  }
  return worst;
}

Fixed DenjoyMap::semiconjugacy_residual(int samples, double eps, std::uint64_t seed) const {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  cantor_->require_tolerance(eps);
  Fixed worst(bits());
  for (const CirclePoint& y : mixed_samples(*cantor_, samples, seed)) {
    const CirclePoint lhs = cantor_->cantor_function(eval(y, eps), eps);
    const CirclePoint rhs = rotate(cantor_->cantor_function(y, eps), tau());
    worst = max(worst, dist_T(lhs, rhs));
  }
  return worst;
}

}  // namespace denjoy
