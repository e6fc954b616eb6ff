#include <gtest/gtest.h>

#include "denjoy/errors.hpp"
#include "denjoy/planar.hpp"
#include "denjoy/sampling.hpp"

using namespace denjoy;

namespace {

constexpr int kB = 256;
constexpr double kEps = 1e-30;

const AdmissibleMap& default_h() {
  static const AdmissibleMap h{DenjoyMap(CantorParams::defaults())};
  return h;
}

Fixed r(std::int64_t a, std::int64_t b) { return Fixed::from_ratio(a, b, kB); }

}  // namespace

TEST(Planar, BumpScaleAndPeak) {
  const AdmissibleMap& h = default_h();
  EXPECT_EQ(h.pi_scale(), r(1, 2));
  const CirclePoint mid = h.circle_map().cantor().gap({0, 0}, kEps).midpoint();
  const BumpValue b = h.bump(mid, kEps);
  EXPECT_LE((b.value - r(1, 4)).abs(), Fixed::ulp(kB) * 4);
  EXPECT_TRUE(b.error_bound.is_zero());
}

TEST(Planar, BumpVanishesOnGapEndpointsAndCantorSet) {
  const AdmissibleMap& h = default_h();
  const CantorApprox& c = h.circle_map().cantor();
  EXPECT_TRUE(h.bump(c.gap({1, 2}, kEps).from(), kEps).value.is_zero());
  for (const CirclePoint& y : cantor_samples(c, 50, 4)) {
    const BumpValue b = h.bump(y, kEps);
    EXPECT_TRUE(b.value.is_zero());
    EXPECT_GT(b.error_bound, Fixed(kB));
  }
}

TEST(Planar, BumpIsSymmetric) {
  const AdmissibleMap& h = default_h();
  for (const CirclePoint& y : mixed_samples(h.circle_map().cantor(), 300, 8)) {
    const Fixed a = h.bump(y, kEps).value;
    const Fixed b = h.bump(rotate_fraction(y, 1, 2), kEps).value;
    EXPECT_LE((a - b).abs().to_double(), 2 * kEps);
    EXPECT_LE(a, r(1, 4));
  }
}

TEST(Planar, RadialSeams) {
  const AdmissibleMap& h = default_h();
  for (const CirclePoint& y : mixed_samples(h.circle_map().cantor(), 100, 2)) {
    const Fixed pi = h.bump(y, kEps).value;
    EXPECT_EQ(h.radial(y, r(1, 2), kEps), r(1, 4));
    EXPECT_EQ(h.radial_with(pi, Fixed::from_int(1, kB)), Fixed::from_int(1, kB) - pi);
  }
}

TEST(Planar, ContractionBranch) {
  const AdmissibleMap& h = default_h();
  const CirclePoint y = CirclePoint::from_decimal("0.3", kB);
  const PlanarPoint p = h.step({y, r(1, 4)}, kEps);
  EXPECT_EQ(p.rho, r(1, 8));
  EXPECT_EQ(p.theta, h.circle_map().eval(y, kEps));
}

TEST(Planar, UnitCircleUnderGapsContracts) {
  const AdmissibleMap& h = default_h();
  const CirclePoint mid = h.circle_map().cantor().gap({1, -1}, kEps).midpoint();
  EXPECT_LT(h.radial(mid, Fixed::from_int(1, kB), kEps), Fixed::from_int(1, kB));
}

TEST(Planar, InvariantCircleOverCantorSet) {
  const AdmissibleMap& h = default_h();
  for (const CirclePoint& y : cantor_samples(h.circle_map().cantor(), 50, 6)) {
    const PlanarPoint p = h.step({y, Fixed::from_int(1, kB)}, kEps);
    EXPECT_LE((p.rho - Fixed::from_int(1, kB)).abs(), h.bump(y, kEps).error_bound);
  }
}

TEST(Planar, OuterBranchPullsInward) {
  const AdmissibleMap& h = default_h();
  const CirclePoint y = CirclePoint::from_decimal("0.3", kB);
  EXPECT_LT(h.radial(y, Fixed::from_int(4, kB), kEps), Fixed::from_int(4, kB));
}

TEST(Planar, NegativeRadius) {
  const AdmissibleMap& h = default_h();
  const CirclePoint y = CirclePoint::from_decimal("0.3", kB);
  EXPECT_THROW(h.radial(y, r(-1, 4), kEps), NegativeRadius);
  EXPECT_THROW(h.planar_orbit({y, r(-1, 4)}, 3, kEps), NegativeRadius);
}

TEST(Planar, StabilityFromOneHalf) {
  const AdmissibleMap& h = default_h();
  const PlanarTrace t = h.planar_orbit({CirclePoint::from_decimal("0.41", kB), r(1, 2)}, 40, kEps);
  Fixed expect = r(1, 2);
  for (const PlanarPoint& p : t.points) {
    EXPECT_EQ(p.rho, expect);
    expect = expect / 2;
  }
}

TEST(Planar, OrbitsOfRotatedStartsRotate) {
  const AdmissibleMap& h = default_h();
  const PlanarPoint a{CirclePoint::from_decimal("0.137", kB), r(3, 4)};
  const PlanarPoint b{rotate_fraction(a.theta, 1, 2), a.rho};
  const PlanarTrace ta = h.planar_orbit(a, 20, kEps);
  const PlanarTrace tb = h.planar_orbit(b, 20, kEps);
  for (std::size_t j = 0; j < ta.points.size(); ++j) {
    const PlanarPoint rotated{rotate_fraction(ta.points[j].theta, 1, 2), ta.points[j].rho};
    EXPECT_LE(planar_distance(rotated, tb.points[j]).to_double(), 6 * kEps * (j + 1)) << j;
  }
}

TEST(Planar, CapValidation) {
  DenjoyMap f(CantorParams::defaults());
  EXPECT_THROW(AdmissibleMap(f, default_pi_coefficient, r(1, 2)), std::invalid_argument);
  EXPECT_THROW(AdmissibleMap(f, default_pi_coefficient, Fixed(kB)), std::invalid_argument);
  const auto negative = [](int, std::int64_t, int bits) { return Fixed::from_int(-1, bits); };
  EXPECT_THROW(AdmissibleMap(f, negative, r(1, 4)), std::invalid_argument);
  const AdmissibleMap small(f, default_pi_coefficient, r(1, 8));
  EXPECT_EQ(small.pi_scale(), r(1, 4));
}

TEST(Planar, EquivarianceResidual) {
  EXPECT_LE(default_h().planar_equivariance_residual(300, kEps).to_double(), 6 * kEps);
}
