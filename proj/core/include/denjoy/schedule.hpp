#pragma once

#include <cstdint>
#include <string>

#include "denjoy/fixed.hpp"

namespace denjoy {

/// Two-sided geometric gap weights w_n = mass * (1-r)/(1+r) * r^|n|.
///
/// The weights sum to `mass` over n in Z; each of the m gaps attached to
/// level n gets length w_n / m. With mass 1 the gaps fill the circle and the
/// Cantor set they leave behind has measure zero.
class GapSchedule {
 public:
  /// Defaults to ratio 1/2, mass 1, i.e. w_n = (1/3) 2^-|n|.
  explicit GapSchedule(int bits = kDefaultPrecisionBits);
  /// Throws std::invalid_argument unless 0 < ratio < 1 and 0 < mass <= 1.
  GapSchedule(Fixed ratio, Fixed mass);

  const Fixed& ratio() const { return ratio_; }
  const Fixed& mass() const { return mass_; }
  int bits() const { return ratio_.bits(); }
  std::string kind() const { return "geometric"; }

  Fixed weight(std::int64_t n) const;
  /// Length of each gap at level n for an m-fold symmetric family.
  Fixed gap_length(std::int64_t n, int m) const { return weight(n) / m; }
  /// Closed form of sum_{|n| > N} w_n.
  Fixed tail_bound(std::int64_t N) const;
  /// w_{n+1} / w_n: 1/r for n < 0, r for n >= 0.
  Fixed level_ratio(std::int64_t n) const;

  friend bool operator==(const GapSchedule&, const GapSchedule&) = default;

 private:
  Fixed power(std::int64_t e) const;

  Fixed ratio_;
  Fixed mass_;
  Fixed base_;
};

}  // namespace denjoy
