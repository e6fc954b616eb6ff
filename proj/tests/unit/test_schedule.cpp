#include <gtest/gtest.h>

#include "denjoy/schedule.hpp"

using namespace denjoy;

namespace {
constexpr int kB = 256;
Fixed r(std::int64_t a, std::int64_t b) { return Fixed::from_ratio(a, b, kB); }
}  // namespace

TEST(Schedule, DefaultWeights) {
  const GapSchedule s(kB);
  EXPECT_EQ(s.weight(0), r(1, 3));
  EXPECT_EQ(s.weight(1), r(1, 6));
  EXPECT_EQ(s.weight(-1), r(1, 6));
  EXPECT_EQ(s.gap_length(0, 2), r(1, 6));
  EXPECT_EQ(s.kind(), "geometric");
}

TEST(Schedule, WeightsSumToMass) {
  const GapSchedule s(r(1, 3), Fixed::from_int(1, kB));
  Fixed total(kB);
  for (int n = -300; n <= 300; ++n) total += s.weight(n);
  EXPECT_LE((total - Fixed::from_int(1, kB)).abs(), Fixed::from_double(1e-60, kB));
}

TEST(Schedule, TailBoundMatchesRemainder) {
  const GapSchedule s(kB);
  for (int N : {0, 1, 5, 20}) {
    Fixed placed(kB);
    for (int n = -N; n <= N; ++n) placed += s.weight(n);
    EXPECT_LE((Fixed::from_int(1, kB) - placed - s.tail_bound(N)).abs(), Fixed::ulp(kB) * 1024) << N;
  }
  EXPECT_EQ(s.tail_bound(-1), Fixed::from_int(1, kB));
}

TEST(Schedule, LevelRatio) {
  const GapSchedule s(kB);
  EXPECT_EQ(s.level_ratio(0), r(1, 2));
  EXPECT_EQ(s.level_ratio(4), r(1, 2));
  EXPECT_EQ(s.level_ratio(-1), Fixed::from_int(2, kB));
}

TEST(Schedule, RejectsInvalidParameters) {
  EXPECT_THROW(GapSchedule(Fixed::from_int(1, kB), Fixed::from_int(1, kB)), std::invalid_argument);
  EXPECT_THROW(GapSchedule(Fixed(kB), Fixed::from_int(1, kB)), std::invalid_argument);
  EXPECT_THROW(GapSchedule(r(1, 2), Fixed(kB)), std::invalid_argument);
  EXPECT_THROW(GapSchedule(r(1, 2), r(3, 2)), std::invalid_argument);
  EXPECT_NO_THROW(GapSchedule(r(1, 2), r(9, 10)));
}
