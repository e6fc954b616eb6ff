#pragma once

#include "denjoy/fixed.hpp"

namespace denjoy {

/// A point of T = R/Z, always held by its representative in [0, 1).
class CirclePoint {
 public:
  explicit CirclePoint(int bits = kDefaultPrecisionBits) : angle_(bits) {}
  /// Canonicalizes any real to [0, 1).
  explicit CirclePoint(const Fixed& any) : angle_(any.frac()) {}

  static CirclePoint from_decimal(std::string_view text, int bits) {
    return CirclePoint(Fixed::from_decimal(text, bits));
  }

  const Fixed& angle() const { return angle_; }
  int bits() const { return angle_.bits(); }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

 private:
  Fixed angle_;
};

/// Closed counter-clockwise arc from `from` to `to`. The full circle is the
/// one degenerate arc allowed; it has `from == to` and length 1.
class Arc {
 public:
  Arc(CirclePoint from, CirclePoint to);
  static Arc full_circle(CirclePoint at);

  const CirclePoint& from() const { return from_; }
  const CirclePoint& to() const { return to_; }
  bool is_full() const { return full_; }
  Fixed length() const;
  CirclePoint midpoint() const;

  friend bool operator==(const Arc&, const Arc&) = default;

 private:
  Arc(CirclePoint from, CirclePoint to, bool full)
      : from_(std::move(from)), to_(std::move(to)), full_(full) {}

  CirclePoint from_;
  CirclePoint to_;
  bool full_ = false;
};

/// A point of the universal cover together with the circle point it covers.
struct LiftValue {
  Fixed value;

  CirclePoint base() const { return CirclePoint(value); }
};

/// Counter-clockwise displacement (q - p) mod 1, in [0, 1).
Fixed ccw_distance(const CirclePoint& p, const CirclePoint& q);

/// Distance on T, in [0, 1/2].
Fixed dist_T(const CirclePoint& p, const CirclePoint& q);

/// True iff p1 lies on the closed counter-clockwise arc from p0 to p2.
/// Throws DegenerateTriple when two of the points agree within the
/// comparison tolerance.
bool cyclic_order(const CirclePoint& p0, const CirclePoint& p1, const CirclePoint& p2);

CirclePoint rotate(const CirclePoint& p, const Fixed& eta);

/// Rotation by k/m with k/m rounded once to the working precision.
CirclePoint rotate_fraction(const CirclePoint& p, std::int64_t k, std::int64_t m);

bool arc_contains(const Arc& a, const CirclePoint& p);

bool approx_equal(const CirclePoint& p, const CirclePoint& q, const Fixed& tol);

}  // namespace denjoy
