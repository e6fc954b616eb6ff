#include "denjoy/circle.hpp"

#include "denjoy/errors.hpp"

namespace denjoy {

Arc::Arc(CirclePoint from, CirclePoint to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_ == to_) throw std::invalid_argument("arc endpoints coincide");
}

Arc Arc::full_circle(CirclePoint at) {
  CirclePoint copy = at;
  return Arc(std::move(at), std::move(copy), true);
}

Fixed Arc::length() const {
  if (full_) return Fixed::from_int(1, from_.bits());
  return ccw_distance(from_, to_);
}

CirclePoint Arc::midpoint() const { return rotate(from_, length() / 2); }

Fixed ccw_distance(const CirclePoint& p, const CirclePoint& q) {
  return (q.angle() - p.angle()).frac();
}

Fixed dist_T(const CirclePoint& p, const CirclePoint& q) {
  const Fixed d = ccw_distance(p, q);
  return min(d, Fixed::from_int(1, d.bits()) - d);
}

bool cyclic_order(const CirclePoint& p0, const CirclePoint& p1, const CirclePoint& p2) {
  const Fixed tol = comparison_tolerance(p0.bits());
  if (dist_T(p0, p1) < tol || dist_T(p1, p2) < tol || dist_T(p0, p2) < tol) {
    throw DegenerateTriple("cyclic_order: points coincide at working precision");
  }
  return ccw_distance(p0, p1) <= ccw_distance(p0, p2);
}

CirclePoint rotate(const CirclePoint& p, const Fixed& eta) { return CirclePoint(p.angle() + eta); }

CirclePoint rotate_fraction(const CirclePoint& p, std::int64_t k, std::int64_t m) {
  return rotate(p, Fixed::from_ratio(k, m, p.bits()));
}

bool arc_contains(const Arc& a, const CirclePoint& p) {
  if (a.is_full()) return true;
  return ccw_distance(a.from(), p) <= a.length();
}

bool approx_equal(const CirclePoint& p, const CirclePoint& q, const Fixed& tol) {
  return dist_T(p, q) <= tol;
}

}  // namespace denjoy
