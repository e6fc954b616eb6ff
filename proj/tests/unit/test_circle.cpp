#include <gtest/gtest.h>

#include "denjoy/circle.hpp"
#include "denjoy/errors.hpp"
#include "denjoy/sampling.hpp"

using namespace denjoy;

namespace {

constexpr int kB = 256;

CirclePoint pt(const char* s) { return CirclePoint::from_decimal(s, kB); }

}  // namespace

TEST(Circle, CanonicalizesToUnitInterval) {
  EXPECT_EQ(pt("1.25"), pt("0.25"));
  EXPECT_EQ(pt("-0.25"), pt("0.75"));
  EXPECT_EQ(pt("3"), pt("0"));
}

TEST(Circle, DistanceIsShortestWay) {
  // Dyadic inputs keep the arithmetic exact.
  EXPECT_EQ(dist_T(pt("0.125"), pt("0.875")), Fixed::from_ratio(1, 4, kB));
  EXPECT_EQ(dist_T(pt("0.875"), pt("0.125")), Fixed::from_ratio(1, 4, kB));
  EXPECT_EQ(dist_T(pt("0"), pt("0.5")), Fixed::from_ratio(1, 2, kB));
  EXPECT_EQ(ccw_distance(pt("0.875"), pt("0.125")), Fixed::from_ratio(1, 4, kB));
  EXPECT_EQ(ccw_distance(pt("0.125"), pt("0.875")), Fixed::from_ratio(3, 4, kB));
  // Rounded decimals agree to an ulp.
  EXPECT_LE((dist_T(pt("0.1"), pt("0.9")) - Fixed::from_decimal("0.2", kB)).abs(), Fixed::ulp(kB));
}

TEST(Circle, DistanceIsAMetricOnSamples) {
  Sampler s(7, kB);
  for (int i = 0; i < 500; ++i) {
    const CirclePoint a = s.point(), b = s.point(), c = s.point();
    EXPECT_EQ(dist_T(a, b), dist_T(b, a));
    EXPECT_LE(dist_T(a, c), dist_T(a, b) + dist_T(b, c));
    EXPECT_LE(dist_T(a, b), Fixed::from_ratio(1, 2, kB));
  }
}

TEST(Circle, CyclicOrder) {
  EXPECT_TRUE(cyclic_order(pt("0.1"), pt("0.2"), pt("0.3")));
  EXPECT_FALSE(cyclic_order(pt("0.1"), pt("0.3"), pt("0.2")));
  EXPECT_TRUE(cyclic_order(pt("0.8"), pt("0.9"), pt("0.1")));
  EXPECT_THROW(cyclic_order(pt("0.1"), pt("0.1"), pt("0.3")), DegenerateTriple);
}

TEST(Circle, CyclicOrderIsInvariantUnderRotation) {
  Sampler s(11, kB);
  for (int i = 0; i < 300; ++i) {
    const CirclePoint a = s.point(), b = s.point(), c = s.point();
    const CirclePoint eta = s.point();
    EXPECT_EQ(cyclic_order(a, b, c), cyclic_order(rotate(a, eta.angle()), rotate(b, eta.angle()), rotate(c, eta.angle())));
    // Swapping two points reverses orientation.
    EXPECT_NE(cyclic_order(a, b, c), cyclic_order(a, c, b));
  }
}

TEST(Circle, RotationByFractionComposesToIdentity) {
  const Fixed tol = comparison_tolerance(kB);
  for (int m : {2, 3, 5, 7}) {
    CirclePoint p = pt("0.123456789");
    const CirclePoint start = p;
    for (int i = 0; i < m; ++i) p = rotate_fraction(p, 1, m);
    EXPECT_TRUE(approx_equal(p, start, tol)) << "m=" << m;
  }
  EXPECT_EQ(rotate_fraction(pt("0.75"), 1, 2), pt("0.25"));
}

TEST(Circle, Arcs) {
  const Arc a(pt("0.875"), pt("0.125"));
  EXPECT_EQ(a.length(), Fixed::from_ratio(1, 4, kB));
  EXPECT_TRUE(arc_contains(a, pt("0.9")));
  EXPECT_TRUE(arc_contains(a, pt("0.05")));
  EXPECT_FALSE(arc_contains(a, pt("0.5")));
  EXPECT_EQ(a.midpoint(), pt("0"));
  EXPECT_THROW(Arc(pt("0.3"), pt("0.3")), std::invalid_argument);
  const Arc full = Arc::full_circle(pt("0.3"));
  EXPECT_TRUE(full.is_full());
  EXPECT_EQ(full.length(), Fixed::from_int(1, kB));
  EXPECT_TRUE(arc_contains(full, pt("0.7")));
}

TEST(Circle, LiftValueBase) {
  const LiftValue v{Fixed::from_decimal("2.75", kB)};
  EXPECT_EQ(v.base(), pt("0.75"));
}
