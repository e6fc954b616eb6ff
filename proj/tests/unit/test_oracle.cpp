#include <gtest/gtest.h>

#include "denjoy/cantor.hpp"
#include "oracle.hpp"

using namespace denjoy;

// Reference values from the brute-force oracle at |n| <= 200 (truncation
// error below 1e-60), rounded to 40 digits. The oracle recomputes them at
// |n| <= 64 below, within that truncation's own tail.
namespace frozen {
constexpr const char* kLeft00 = "0.0000000000000000000000000000000000000000";
constexpr const char* kLeft10 = "0.5000000000000000000000000000000000000000";
constexpr const char* kLeft01 = "0.6833332061757876774165655768217700778209";
constexpr const char* kLeft0m1 = "0.4000001271575456559167677565115632555125";
constexpr const char* kLeft13 = "0.3791659990895519731036359449809595752263";
constexpr const char* kLeft05 = "0.1781222899548082082738871893473081168908";
// m = 3.
constexpr const char* kM3Left01 = "0.6084864391951000156421466931770762756079";
constexpr const char* kM3Left2m2 = "0.5065616797900277386724110448350870887580";
// τ = √2 - 1, φ = 1/10.
constexpr const char* kS2Left02 = "0.9464285720407912906969662083632128257410";
constexpr const char* kS2Left1m3 = "0.4246031752726781950896648009586011603133";
}  // namespace frozen

namespace {

constexpr double kEps = 1e-30;

double gap_left_error(const CantorApprox& c, OrbitIndex idx, const char* expect) {
  const Fixed got = c.gap_left_endpoint(idx, kEps).angle();
  return (got - Fixed::from_decimal(expect, c.bits())).abs().to_double();
}

double oracle_error(const oracle::Construction& o, int k, std::int64_t n, int N, const char* expect) {
  return static_cast<double>(abs(o.left_endpoint(k, n, N) - oracle::Real(expect)));
}

}  // namespace

TEST(Oracle, FrozenValuesReproduceAtDepth64) {
  oracle::Construction o;
  const double tail64 = static_cast<double>(o.tail(64));
  EXPECT_LT(tail64, 4e-20);
  EXPECT_LE(oracle_error(o, 0, 0, 64, frozen::kLeft00), tail64);
  EXPECT_LE(oracle_error(o, 1, 0, 64, frozen::kLeft10), tail64);
  EXPECT_LE(oracle_error(o, 0, 1, 64, frozen::kLeft01), tail64);
  EXPECT_LE(oracle_error(o, 0, -1, 64, frozen::kLeft0m1), tail64);
  EXPECT_LE(oracle_error(o, 1, 3, 64, frozen::kLeft13), tail64);
  EXPECT_LE(oracle_error(o, 0, 5, 64, frozen::kLeft05), tail64);
}

TEST(Oracle, HalfWayGapSitsAtOneHalf) {
  // Symmetry pairs every base point in (0, 1/2) with one in (1/2, 1), so
  // the left end of gap (1,0) is l(0,0) + (1 - 2 l(0,0)) / 2 = 1/2.
  const CantorApprox c(CantorParams::defaults());
  EXPECT_EQ(c.gap_left_endpoint({1, 0}, kEps).angle(), Fixed::from_ratio(1, 2, c.bits()));
}

TEST(Oracle, DefaultModelMatchesBruteForce) {
  const CantorApprox c(CantorParams::defaults());
  const double tol = c.resolution().to_double();
  EXPECT_LE(gap_left_error(c, {0, 0}, frozen::kLeft00), tol);
  EXPECT_LE(gap_left_error(c, {1, 0}, frozen::kLeft10), tol);
  EXPECT_LE(gap_left_error(c, {0, 1}, frozen::kLeft01), tol);
  EXPECT_LE(gap_left_error(c, {0, -1}, frozen::kLeft0m1), tol);
  EXPECT_LE(gap_left_error(c, {1, 3}, frozen::kLeft13), tol);
  EXPECT_LE(gap_left_error(c, {0, 5}, frozen::kLeft05), tol);
}

TEST(Oracle, ThreeFoldModelMatchesBruteForce) {
  CantorParams p = CantorParams::defaults();
  p.m = 3;
  const CantorApprox c(p);
  const double tol = c.resolution().to_double();
  EXPECT_LE(gap_left_error(c, {0, 1}, frozen::kM3Left01), tol);
  EXPECT_LE(gap_left_error(c, {2, -2}, frozen::kM3Left2m2), tol);
}

TEST(Oracle, ShiftedSqrt2ModelMatchesBruteForce) {
  CantorParams p = CantorParams::defaults();
  p.tau = sqrt2_minus_one(p.bits());
  p.phi = Fixed::from_decimal("0.1", p.bits());
  const CantorApprox c(p);
  const double tol = c.resolution().to_double();
  EXPECT_LE(gap_left_error(c, {0, 2}, frozen::kS2Left02), tol);
  EXPECT_LE(gap_left_error(c, {1, -3}, frozen::kS2Left1m3), tol);
}

TEST(Oracle, RandomGapsAgainstBruteForce) {
  // Beyond the frozen points: a sweep of gaps compared live with the oracle.
  const CantorApprox c(CantorParams::defaults());
  oracle::Construction o;
  const double tol = c.resolution().to_double() + 1e-55;
  for (int k = 0; k < 2; ++k) {
    for (std::int64_t n = -12; n <= 12; n += 3) {
      const oracle::Real expect = o.left_endpoint(k, n, 200);
      const Fixed got = c.gap_left_endpoint({k, n}, kEps).angle();
      EXPECT_LE(static_cast<double>(abs(oracle::Real(got.to_exact_decimal()) - expect)), tol) << k << "," << n;
    }
  }
}

TEST(Oracle, MeasureMatchesClosedForm) {
  const CantorApprox c(CantorParams::defaults());
  oracle::Construction o;
  for (int N = 0; N <= 20; ++N) {
    const oracle::Real closed = oracle::Real(2) / 3 / pow(oracle::Real(2), N);
    EXPECT_LT(static_cast<double>(abs(o.measure_remaining(N) - closed)), 1e-90);
    EXPECT_LT(static_cast<double>(abs(oracle::Real(c.measure_remaining(N).to_exact_decimal()) - closed)), 1e-70);
  }
}
