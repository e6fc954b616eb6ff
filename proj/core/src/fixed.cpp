#include "denjoy/fixed.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace denjoy {

namespace mp = boost::multiprecision;

namespace {

using Wide = mp::cpp_int;

// Shifts are only applied to 1: checked cpp_int rejects shifting negatives.
BigInt pow2(int bits) { return BigInt(1) << bits; }

// Floor division for b > 0.
template <class Int>
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a.sign() < 0 && q * b != a) q -= 1;
  return q;
}

// Nearest-integer division, ties toward +inf.
template <class Int>
Int round_div(Int a, Int b) {
  if (b.sign() < 0) {
    a = -a;
    b = -b;
  }
  return floor_div<Int>(2 * a + b, 2 * b);
}

void check_bits(int bits) {
  if (bits < kMinPrecisionBits || bits > kMaxPrecisionBits) {
    throw std::invalid_argument("precision bits out of range: " + std::to_string(bits));
  }
}

}  // namespace

Fixed::Fixed(int bits) : raw_(0), bits_(bits) { check_bits(bits); }

Fixed Fixed::from_raw(BigInt raw, int bits) {
  check_bits(bits);
  return Fixed(std::move(raw), bits);
}

Fixed Fixed::from_int(std::int64_t value, int bits) {
  check_bits(bits);
  return Fixed(BigInt(value) * pow2(bits), bits);
}

Fixed Fixed::from_ratio(std::int64_t num, std::int64_t den, int bits) {
  check_bits(bits);
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Fixed(round_div<BigInt>(BigInt(num) * pow2(bits), BigInt(den)), bits);
}

Fixed Fixed::from_double(double value, int bits) {
  check_bits(bits);
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite double");
  if (value == 0.0) return Fixed(bits);
  int exp = 0;
  const double mant = std::frexp(value, &exp);  // value = mant * 2^exp, |mant| in [0.5, 1)
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  // value = scaled * 2^(exp - 53); raw = value * 2^bits
  const int shift = exp - 53 + bits;
  BigInt m(scaled);
  if (shift >= 0) return Fixed(m * pow2(shift), bits);
  return Fixed(round_div<BigInt>(m, pow2(-shift)), bits);
}

Fixed Fixed::from_decimal(std::string_view text, int bits) {
  check_bits(bits);
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  Wide digits = 0;
  int frac_digits = 0;
  int total_digits = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      if (seen_point) ++frac_digits;
      ++total_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (total_digits == 0) throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
  int exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    int exp_digits = 0;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      exponent = exponent * 10 + (text[i] - '0');
      if (++exp_digits > 4) throw std::invalid_argument("exponent too large");
    }
    if (exp_digits == 0) throw std::invalid_argument("malformed exponent");
    if (exp_negative) exponent = -exponent;
  }
  if (i != text.size()) throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
  if (total_digits > 400) throw std::invalid_argument("too many digits");

  const int scale = exponent - frac_digits;  // value = digits * 10^scale
  Wide raw;
  if (scale >= 0) {
    raw = (digits * mp::pow(Wide(10), static_cast<unsigned>(scale))) << bits;
  } else {
    raw = round_div<Wide>(digits << bits, mp::pow(Wide(10), static_cast<unsigned>(-scale)));
  }
  if (mp::msb(raw + 1) > 1000) throw std::invalid_argument("decimal out of range");
  if (negative) raw = -raw;
  return Fixed(raw.convert_to<BigInt>(), bits);
}

Fixed Fixed::ulp(int bits) {
  check_bits(bits);
  return Fixed(BigInt(1), bits);
}

Fixed Fixed::sqrt(const Fixed& value) {
  if (value.is_negative()) throw std::domain_error("sqrt of negative");
  return Fixed(mp::sqrt(BigInt(value.raw_ << value.bits_)), value.bits_);
}

void Fixed::check_same(const Fixed& other) const {
  if (bits_ != other.bits_) throw std::logic_error("mixed fixed-point precisions");
}

Fixed Fixed::operator-() const { return Fixed(-raw_, bits_); }

Fixed& Fixed::operator+=(const Fixed& rhs) {
  check_same(rhs);
  raw_ += rhs.raw_;
  return *this;
}

Fixed& Fixed::operator-=(const Fixed& rhs) {
  check_same(rhs);
  raw_ -= rhs.raw_;
  return *this;
}

Fixed& Fixed::operator*=(const Fixed& rhs) {
  check_same(rhs);
  raw_ = floor_div<BigInt>(raw_ * rhs.raw_ + (BigInt(1) << (bits_ - 1)), pow2(bits_));
  return *this;
}

Fixed& Fixed::operator/=(const Fixed& rhs) {
  check_same(rhs);
  if (rhs.raw_.is_zero()) throw std::domain_error("fixed-point division by zero");
  raw_ = round_div<BigInt>(raw_ * pow2(bits_), rhs.raw_);
  return *this;
}

Fixed& Fixed::operator*=(std::int64_t k) {
  raw_ *= k;
  return *this;
}

Fixed& Fixed::operator/=(std::int64_t k) {
  if (k == 0) throw std::domain_error("fixed-point division by zero");
  raw_ = round_div<BigInt>(raw_, BigInt(k));
  return *this;
}

bool operator==(const Fixed& a, const Fixed& b) {
  a.check_same(b);
  return a.raw_ == b.raw_;
}

std::strong_ordering operator<=>(const Fixed& a, const Fixed& b) {
  a.check_same(b);
  const int c = a.raw_.compare(b.raw_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t Fixed::floor() const {
  return floor_div<BigInt>(raw_, pow2(bits_)).convert_to<std::int64_t>();
}

Fixed Fixed::frac() const {
  const BigInt one = pow2(bits_);
  BigInt r = raw_ % one;
  if (r.sign() < 0) r += one;
  return Fixed(std::move(r), bits_);
}

std::string Fixed::to_decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  const Wide mag = Wide(raw_.sign() < 0 ? BigInt(-raw_) : raw_);
  const Wide one = Wide(1) << bits_;
  Wide int_part = mag >> bits_;
  const Wide frac_part = mag & (one - 1);
  const Wide ten_pow = mp::pow(Wide(10), static_cast<unsigned>(digits));
  Wide scaled = (frac_part * ten_pow * 2 + one) / (2 * one);
  if (scaled == ten_pow) {
    int_part += 1;
    scaled = 0;
  }
  std::string out;
  if (raw_.sign() < 0 && (int_part != 0 || scaled != 0)) out.push_back('-');
  out += int_part.str();
  if (digits > 0) {
    std::string f = scaled.str();
    out.push_back('.');
    out.append(static_cast<std::size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

double Fixed::to_double() const {
  // Keep 64 significant bits before scaling so huge raw values do not overflow.
  const BigInt mag = raw_.sign() < 0 ? BigInt(-raw_) : raw_;
  if (mag.is_zero()) return 0.0;
  const int top = static_cast<int>(mp::msb(mag));
  const int drop = top > 63 ? top - 63 : 0;
  const auto head = static_cast<std::uint64_t>(mag >> drop);
  const double v = std::ldexp(static_cast<double>(head), drop - bits_);
  return raw_.sign() < 0 ? -v : v;
}

Fixed min(const Fixed& a, const Fixed& b) { return b < a ? b : a; }
Fixed max(const Fixed& a, const Fixed& b) { return a < b ? b : a; }

Fixed comparison_tolerance(int bits) { return Fixed::from_raw(BigInt(1) << 16, bits); }

std::string format_sci(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", value);
  return buf;
}

}  // namespace denjoy
