// Randomized invariants over parameter sweeps: m in {2,3,5}, both symbolic
// rotation numbers, shifted phases, several seeds.

#include <gtest/gtest.h>

#include <algorithm>
#include <memory>

#include "denjoy/planar.hpp"
#include "denjoy/sampling.hpp"
#include "oracle.hpp"

using namespace denjoy;

namespace {

constexpr int kB = 256;
constexpr double kEps = 1e-30;

struct Case {
  int m;
  bool golden;
  const char* phi;
};

std::string case_name(const testing::TestParamInfo<Case>& info) {
  std::string phi = info.param.phi;
  std::replace(phi.begin(), phi.end(), '.', '_');
  return "m" + std::to_string(info.param.m) + (info.param.golden ? "_golden" : "_sqrt2m1") + "_phi" + phi;
}

class Sweep : public testing::TestWithParam<Case> {
 protected:
  void SetUp() override {
    CantorParams p = CantorParams::defaults();
    p.m = GetParam().m;
    p.tau = GetParam().golden ? golden_tau(kB) : sqrt2_minus_one(kB);
    p.phi = Fixed::from_decimal(GetParam().phi, kB);
    cantor_ = std::make_shared<const CantorApprox>(p);
    f_ = std::make_unique<DenjoyMap>(cantor_);
  }
  std::shared_ptr<const CantorApprox> cantor_;
  std::unique_ptr<DenjoyMap> f_;
};

}  // namespace

TEST_P(Sweep, Equivariance) {
  for (std::uint64_t seed : {1u, 2u, 3u}) EXPECT_LE(f_->equivariance_residual(700, kEps, seed).to_double(), 4 * kEps);
}

TEST_P(Sweep, SemiConjugacy) {
  for (std::uint64_t seed : {1u, 5u}) EXPECT_LE(f_->semiconjugacy_residual(700, kEps, seed).to_double(), 4 * kEps);
}

TEST_P(Sweep, PreservesCyclicOrder) {
  Sampler s(31, kB);
  const Fixed sep = Fixed::from_double(1e-6, kB);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const CirclePoint a = s.point(), b = s.point(), c = s.point();
    if (dist_T(a, b) < sep || dist_T(b, c) < sep || dist_T(a, c) < sep) continue;
    EXPECT_EQ(cyclic_order(f_->eval(a, kEps), f_->eval(b, kEps), f_->eval(c, kEps)), cyclic_order(a, b, c));
    ++checked;
  }
  EXPECT_GT(checked, 300);
}

TEST_P(Sweep, CantorFunctionIsMonotoneDegreeOne) {
  std::vector<Fixed> ys;
  for (const CirclePoint& y : mixed_samples(*cantor_, 600, 12)) ys.push_back(y.angle());
  std::sort(ys.begin(), ys.end());
  // Lift P to [0,1) starting at the point where the base of gap (0,0) sits.
  const Fixed start = cantor_->entries().front().left;
  std::vector<Fixed> lifted;
  for (const Fixed& y : ys) {
    if (y < start) continue;
    lifted.push_back(cantor_->cantor_function(CirclePoint(y), kEps).angle());
  }
  for (std::size_t i = 0; i + 1 < lifted.size(); ++i) EXPECT_LE(lifted[i], lifted[i + 1]);
}

TEST_P(Sweep, CantorFunctionInvertsJump) {
  Sampler s(77, kB);
  for (int i = 0; i < 300; ++i) {
    const CirclePoint x = s.point();
    EXPECT_LE(dist_T(cantor_->cantor_function(cantor_->jump(x), kEps), x).to_double(), kEps);
  }
}

TEST_P(Sweep, StagesAreNestedSymmetricAndOrdered) {
  const int m = GetParam().m;
  for (int j = 1; j <= 4; ++j) {
    const auto outer = cantor_->stage(j, kEps);
    ASSERT_EQ(outer.size(), static_cast<std::size_t>(m * (2 * j - 1)));
    const std::size_t shift = outer.size() / static_cast<std::size_t>(m);
    for (std::size_t i = 0; i < outer.size(); ++i) {
      EXPECT_LE(dist_T(rotate_fraction(outer[i].from(), 1, m), outer[(i + shift) % outer.size()].from()).to_double(),
                2 * kEps);
    }
    if (j == 4) break;
    for (const Arc& b : cantor_->stage(j + 1, kEps)) {
      EXPECT_TRUE(std::any_of(outer.begin(), outer.end(), [&](const Arc& a) {
        return arc_contains(a, b.from()) && arc_contains(a, b.to()) && b.length() <= a.length();
      }));
    }
  }
  // Exhaustive triples of shallow gaps: gap order equals base-point order.
  std::vector<OrbitIndex> idx;
  for (int k = 0; k < m; ++k)
    for (int n = -3; n <= 3; ++n) idx.push_back({k, n});
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      for (std::size_t c = b + 1; c < idx.size(); ++c) {
        const bool gaps = cyclic_order(cantor_->gap(idx[a], kEps).midpoint(), cantor_->gap(idx[b], kEps).midpoint(),
                                       cantor_->gap(idx[c], kEps).midpoint());
        const bool bases =
            cyclic_order(cantor_->base_point(idx[a]), cantor_->base_point(idx[b]), cantor_->base_point(idx[c]));
        ASSERT_EQ(gaps, bases);
      }
}

TEST_P(Sweep, RotationNumberWithinBound) {
  const RotationEstimate est = f_->rotation_number(CirclePoint::from_decimal("0.444", kB), 4000, kEps);
  EXPECT_LE((est.estimate - f_->tau()).abs().to_double(), est.bound);
}

TEST_P(Sweep, PlanarEquivariance) {
  const AdmissibleMap h(*f_);
  EXPECT_LE(h.planar_equivariance_residual(300, kEps, 4).to_double(), 6 * kEps);
}

INSTANTIATE_TEST_SUITE_P(Params, Sweep,
                         testing::Values(Case{2, true, "0"}, Case{3, true, "0"}, Case{5, true, "0"},
                                         Case{2, false, "0.1"}, Case{3, false, "0.73"}, Case{5, true, "0.05"}),
                         case_name);

TEST(FixedProperties, AgreesWithHighPrecisionReference) {
  Sampler s(2024, kB);
  for (int i = 0; i < 300; ++i) {
    const Fixed a = s.unit() * 8 - Fixed::from_int(4, kB);
    const Fixed b = s.unit() + Fixed::ulp(kB);
    const oracle::Real ra(a.to_exact_decimal()), rb(b.to_exact_decimal());
    const double ulp = std::ldexp(1.0, -kB);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_LE(static_cast<double>(abs(oracle::Real((a * b).to_exact_decimal()) - ra * rb)), ulp);
    EXPECT_LE(static_cast<double>(abs(oracle::Real((a / b).to_exact_decimal()) - ra / rb)), ulp);
  }
}
