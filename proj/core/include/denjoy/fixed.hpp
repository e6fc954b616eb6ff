#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace denjoy {

/// Storage for the raw fixed-point integer. Wide enough for products of two
/// lift-sized values at the largest supported precision.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
    1024, 1024, boost::multiprecision::signed_magnitude, boost::multiprecision::checked, void>>;

inline constexpr int kDefaultPrecisionBits = 256;
inline constexpr int kMinPrecisionBits = 64;
inline constexpr int kMaxPrecisionBits = 448;

/// Signed binary fixed-point real: value = raw / 2^bits.
///
/// Addition and subtraction are exact. Multiplication and division round to
/// nearest. Mixing two precisions in one operation is a logic error.
class Fixed {
 public:
  explicit Fixed(int bits = kDefaultPrecisionBits);

  static Fixed from_raw(BigInt raw, int bits);
  static Fixed from_int(std::int64_t value, int bits);
  /// Nearest representable value to num/den; den must be nonzero.
  static Fixed from_ratio(std::int64_t num, std::int64_t den, int bits);
  /// Exact conversion of a finite double (rounded to nearest at `bits`).
  static Fixed from_double(double value, int bits);
  /// Parses `[+-]digits[.digits][e[+-]digits]`. Throws std::invalid_argument.
  static Fixed from_decimal(std::string_view text, int bits);
  /// 2^-bits.
  static Fixed ulp(int bits);
  /// floor(sqrt(value)) at the same precision; value must be nonnegative.
  static Fixed sqrt(const Fixed& value);

  int bits() const { return bits_; }
  const BigInt& raw() const { return raw_; }

  Fixed operator-() const;
  Fixed& operator+=(const Fixed& rhs);
  Fixed& operator-=(const Fixed& rhs);
  Fixed& operator*=(const Fixed& rhs);
  Fixed& operator/=(const Fixed& rhs);
  Fixed& operator*=(std::int64_t k);
  Fixed& operator/=(std::int64_t k);

  friend Fixed operator+(Fixed a, const Fixed& b) { return a += b; }
  friend Fixed operator-(Fixed a, const Fixed& b) { return a -= b; }
  friend Fixed operator*(Fixed a, const Fixed& b) { return a *= b; }
  friend Fixed operator/(Fixed a, const Fixed& b) { return a /= b; }
  friend Fixed operator*(Fixed a, std::int64_t k) { return a *= k; }
  friend Fixed operator*(std::int64_t k, Fixed a) { return a *= k; }
  friend Fixed operator/(Fixed a, std::int64_t k) { return a /= k; }

  friend bool operator==(const Fixed& a, const Fixed& b);
  friend std::strong_ordering operator<=>(const Fixed& a, const Fixed& b);

  bool is_zero() const { return raw_.is_zero(); }
  bool is_negative() const { return raw_.sign() < 0; }
  Fixed abs() const { return is_negative() ? -*this : *this; }

  /// Largest integer not exceeding the value.
  std::int64_t floor() const;
  /// value - floor(value), in [0, 1).
  Fixed frac() const;

  /// Decimal string with exactly `digits` fractional digits, rounded to nearest.
  std::string to_decimal(int digits) const;
  /// Exact decimal expansion (`bits` fractional digits always suffice).
  std::string to_exact_decimal() const { return to_decimal(bits_); }
  double to_double() const;

 private:
  Fixed(BigInt raw, int bits) : raw_(std::move(raw)), bits_(bits) {}
  void check_same(const Fixed& other) const;

  BigInt raw_;
  int bits_;
};

Fixed min(const Fixed& a, const Fixed& b);
Fixed max(const Fixed& a, const Fixed& b);

/// Comparison tolerance 2^(-bits+16).
Fixed comparison_tolerance(int bits);

/// "%.6e" rendering, used wherever a double is written out.
std::string format_sci(double value);

}  // namespace denjoy
