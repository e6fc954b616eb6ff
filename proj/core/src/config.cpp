#include "denjoy/config.hpp"

#include <cstdio>

#include <json.hpp>

#include "denjoy/errors.hpp"

namespace denjoy {

using nlohmann::json;

namespace {

std::string real_field(const json& j, const std::string& name) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
    return buf;
  }
  throw ConfigInvalid(name, "expected a decimal string or number");
}

int int_field(const json& j, const std::string& name) {
  if (!j.is_number_integer()) throw ConfigInvalid(name, "expected an integer");
  const long long v = j.get<long long>();
  if (v < -1000000 || v > 1000000) throw ConfigInvalid(name, "integer out of range");
  return static_cast<int>(v);
}

Fixed parse_real(const std::string& text, const std::string& field, int bits) {
  try {
    return Fixed::from_decimal(text, bits);
  } catch (const std::invalid_argument& e) {
    throw ConfigInvalid(field, e.what());
  }
}

}  // namespace

BuildConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigInvalid("<document>", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigInvalid("<document>", "expected a JSON object");

  BuildConfig config;
  for (const auto& [key, value] : doc.items()) {
    if (key == "m") {
      config.m = int_field(value, key);
    } else if (key == "tau") {
      config.tau = real_field(value, key);
    } else if (key == "phi") {
      config.phi = real_field(value, key);
    } else if (key == "depth") {
      config.depth = int_field(value, key);
    } else if (key == "precision_bits") {
      config.precision_bits = int_field(value, key);
    } else if (key == "pi_cap") {
      config.pi_cap = real_field(value, key);
    } else if (key == "schedule") {
      if (!value.is_object()) throw ConfigInvalid("schedule", "expected an object");
      for (const auto& [skey, svalue] : value.items()) {
        if (skey == "kind") {
          if (!svalue.is_string()) throw ConfigInvalid("schedule.kind", "expected a string");
          config.schedule.kind = svalue.get<std::string>();
        } else if (skey == "ratio") {
          config.schedule.ratio = real_field(svalue, "schedule.ratio");
        } else if (skey == "mass") {
          config.schedule.mass = real_field(svalue, "schedule.mass");
        } else {
          throw ConfigInvalid("schedule." + skey, "unknown key");
        }
      }
    } else {
      throw ConfigInvalid(key, "unknown key");
    }
  }
  return config;
}

std::string config_to_json(const BuildConfig& config) {
  json doc = {
      {"m", config.m},
      {"tau", config.tau},
      {"phi", config.phi},
      {"schedule", {{"kind", config.schedule.kind}, {"ratio", config.schedule.ratio}, {"mass", config.schedule.mass}}},
      {"depth", config.depth},
      {"precision_bits", config.precision_bits},
      {"pi_cap", config.pi_cap},
  };
  return doc.dump(2);
}

Fixed resolve_tau(const std::string& tau, int bits) {
  if (tau == "golden") return golden_tau(bits);
  if (tau == "sqrt2m1") return sqrt2_minus_one(bits);
  return parse_real(tau, "tau", bits);
}

bool continued_fraction_terminates(const Fixed& x, int max_terms) {
  // x = p / 2^bits; run Euclid on (2^bits, p).
  BigInt a = BigInt(1) << x.bits();
  BigInt b = x.raw();
  for (int term = 0; term < max_terms; ++term) {
    if (b.is_zero()) return true;
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return b.is_zero();
}

void validate(const BuildConfig& config) {
  if (config.m < 1 || config.m > 1024) throw ConfigInvalid("m", "must be an integer in [1, 1024]");
  if (config.precision_bits < kMinPrecisionBits || config.precision_bits > kMaxPrecisionBits) {
    throw ConfigInvalid("precision_bits", "must lie in [" + std::to_string(kMinPrecisionBits) + ", " +
                                              std::to_string(kMaxPrecisionBits) + "]");
  }
  if (config.depth < 1) throw ConfigInvalid("depth", "must be >= 1");
  const int bits = config.precision_bits;
  const Fixed zero(bits);
  const Fixed one = Fixed::from_int(1, bits);

  const Fixed tau = resolve_tau(config.tau, bits);
  if (!(zero < tau && tau < one)) throw ConfigInvalid("tau", "must lie strictly between 0 and 1");
  if (continued_fraction_terminates(tau, config.depth)) {
    throw ConfigInvalid("tau", "fails the rationality screen: continued fraction terminates within " +
                                   std::to_string(config.depth) + " terms");
  }
  parse_real(config.phi, "phi", bits);

  if (config.schedule.kind != "geometric") throw ConfigInvalid("schedule.kind", "only \"geometric\" is supported");
  const Fixed ratio = parse_real(config.schedule.ratio, "schedule.ratio", bits);
  if (!(zero < ratio && ratio < one)) throw ConfigInvalid("schedule.ratio", "must lie in (0,1)");
  const Fixed mass = parse_real(config.schedule.mass, "schedule.mass", bits);
  if (!(zero < mass && mass <= one)) throw ConfigInvalid("schedule.mass", "must lie in (0,1]");

  const Fixed cap = parse_real(config.pi_cap, "pi_cap", bits);
  if (!(zero < cap && cap <= Fixed::from_ratio(1, 4, bits))) throw ConfigInvalid("pi_cap", "must lie in (0, 1/4]");

  const GapSchedule schedule(ratio, mass);
  if (schedule.tail_bound(config.depth) < Fixed::from_raw(BigInt(1) << 64, bits)) {
    throw ConfigInvalid("depth", "too deep for " + std::to_string(bits) + "-bit precision");
  }
}

CantorParams to_cantor_params(const BuildConfig& config) {
  validate(config);
  const int bits = config.precision_bits;
  return CantorParams{config.m, resolve_tau(config.tau, bits),
                      Fixed::from_decimal(config.phi, bits).frac(),
                      GapSchedule(Fixed::from_decimal(config.schedule.ratio, bits),
                                  Fixed::from_decimal(config.schedule.mass, bits)),
                      config.depth};
}

std::string config_hash(const BuildConfig& config) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : config_to_json(config)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace denjoy
