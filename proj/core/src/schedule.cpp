#include "denjoy/schedule.hpp"

#include <stdexcept>

namespace denjoy {

GapSchedule::GapSchedule(int bits)
    : GapSchedule(Fixed::from_ratio(1, 2, bits), Fixed::from_int(1, bits)) {}

GapSchedule::GapSchedule(Fixed ratio, Fixed mass)
    : ratio_(std::move(ratio)), mass_(std::move(mass)), base_(ratio_.bits()) {
  const Fixed zero(ratio_.bits());
  const Fixed one = Fixed::from_int(1, ratio_.bits());
  if (!(zero < ratio_ && ratio_ < one)) throw std::invalid_argument("schedule ratio must lie in (0,1)");
  if (!(zero < mass_ && mass_ <= one)) throw std::invalid_argument("schedule mass must lie in (0,1]");
  base_ = mass_ * (one - ratio_) / (one + ratio_);
}

Fixed GapSchedule::power(std::int64_t e) const {
  Fixed result = Fixed::from_int(1, bits());
  Fixed square = ratio_;
  while (e > 0) {
    if (e & 1) result *= square;
    square *= square;
    e >>= 1;
  }
  return result;
}

Fixed GapSchedule::weight(std::int64_t n) const { return base_ * power(n < 0 ? -n : n); }

Fixed GapSchedule::tail_bound(std::int64_t N) const {
  if (N < 0) return mass_;
  const Fixed one = Fixed::from_int(1, bits());
  return mass_ * power(N + 1) * 2 / (one + ratio_);
}

Fixed GapSchedule::level_ratio(std::int64_t n) const {
  return n < 0 ? Fixed::from_int(1, bits()) / ratio_ : ratio_;
}

}  // namespace denjoy
