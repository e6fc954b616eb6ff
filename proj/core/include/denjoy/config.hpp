#pragma once

#include <string>
#include <string_view>

#include "denjoy/cantor.hpp"

namespace denjoy {

struct ScheduleConfig {
  std::string kind = "geometric";
  std::string ratio = "0.5";
  std::string mass = "1";

  friend bool operator==(const ScheduleConfig&, const ScheduleConfig&) = default;
};

/// User-facing construction parameters. Real-valued fields stay strings so
/// they are re-read at whatever precision the artifact asks for.
struct BuildConfig {
  int m = 2;
  /// Decimal, or one of the tags "golden" ((√5-1)/2) and "sqrt2m1" (√2-1).
  std::string tau = "golden";
  std::string phi = "0";
  ScheduleConfig schedule;
  int depth = 128;
  int precision_bits = kDefaultPrecisionBits;
  std::string pi_cap = "0.25";

  friend bool operator==(const BuildConfig&, const BuildConfig&) = default;
};

/// Parses a config document; absent keys keep their defaults, unknown keys
/// are rejected. Throws ConfigInvalid naming the offending field.
BuildConfig parse_config(std::string_view json_text);

/// Canonical JSON form (sorted keys, two-space indent).
std::string config_to_json(const BuildConfig& config);

/// Field checks plus the rationality screen on tau. Does not build the
/// gap table; see to_cantor_params / CantorApprox for the collision screen.
void validate(const BuildConfig& config);

Fixed resolve_tau(const std::string& tau, int bits);

/// True when the continued-fraction expansion of x (0 < x < 1) ends within
/// `max_terms` partial quotients.
bool continued_fraction_terminates(const Fixed& x, int max_terms);

CantorParams to_cantor_params(const BuildConfig& config);

/// 64-bit FNV-1a of the canonical config JSON, as 16 hex digits.
std::string config_hash(const BuildConfig& config);

}  // namespace denjoy
