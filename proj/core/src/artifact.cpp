#include "denjoy/artifact.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "denjoy/errors.hpp"
#include "denjoy/planar.hpp"

namespace denjoy {

using nlohmann::json;

namespace {

json config_json(const BuildConfig& c) { return json::parse(config_to_json(c)); }

BuildConfig config_from(const json& j) { return parse_config(j.dump()); }

}  // namespace

std::string build_artifact(const BuildConfig& config) {
  const auto cantor = std::make_shared<const CantorApprox>(to_cantor_params(config));
  const int bits = config.precision_bits;
  const AdmissibleMap h(DenjoyMap(cantor), default_pi_coefficient, Fixed::from_decimal(config.pi_cap, bits));

  json truncation = json::array();
  for (int e = 5; e <= 40; e += 5) {
    const double eps = std::pow(10.0, -e);
    json row = {{"eps", format_sci(eps)}, {"N", cantor->truncation_depth(eps)}};
    row["within_model"] = Fixed::from_double(eps, bits) >= cantor->resolution();
    truncation.push_back(row);
  }
  json tails = json::array();
  for (int N = 0; N <= config.depth; N += (N < 8 ? 1 : 8)) {
    tails.push_back({{"N", N}, {"tail", format_sci(cantor->params().schedule.tail_bound(N).to_double())}});
  }

  const CantorParams& p = cantor->params();
  json derived = {
      {"tau_decimal", p.tau.to_decimal(kDecimalDigits)},
      {"tau_exact", p.tau.to_exact_decimal()},
      {"phi_decimal", p.phi.to_decimal(kDecimalDigits)},
      {"gap_count", cantor->entries().size()},
      {"model_resolution", format_sci(cantor->resolution().to_double())},
      {"residual_density", format_sci(cantor->residual_density().to_double())},
      {"measure_remaining_at_depth", format_sci(cantor->measure_remaining(config.depth).to_double())},
      {"pi_scale", h.pi_scale().to_decimal(kDecimalDigits)},
      {"truncation_depths", truncation},
      {"tail_bounds", tails},
  };
  json doc = {
      {"schema", kArtifactSchema},
      {"config", config_json(config)},
      {"config_hash", config_hash(config)},
      {"derived", derived},
  };
  return doc.dump(2) + "\n";
}

BuildConfig load_artifact(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigInvalid("<artifact>", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("schema", "") != kArtifactSchema) {
    throw ConfigInvalid("schema", std::string("expected \"") + kArtifactSchema + "\"");
  }
  if (!doc.contains("config")) throw ConfigInvalid("config", "missing");
  BuildConfig config = config_from(doc["config"]);
  validate(config);
  return config;
}

std::string cantor_to_json(const CantorApprox& cantor) {
  const CantorParams& p = cantor.params();
  json doc = {
      {"schema", kCantorSchema},
      {"m", p.m},
      {"tau", p.tau.to_exact_decimal()},
      {"phi", p.phi.to_exact_decimal()},
      {"schedule",
       {{"kind", p.schedule.kind()},
        {"params", {{"ratio", p.schedule.ratio().to_exact_decimal()}, {"mass", p.schedule.mass().to_exact_decimal()}}}}},
      {"depth", p.depth},
      {"precision_bits", p.bits()},
  };
  return doc.dump(2) + "\n";
}

CantorParams cantor_params_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
    if (doc.at("schema").get<std::string>() != kCantorSchema) throw ConfigInvalid("schema", "unexpected schema");
    const int bits = doc.at("precision_bits").get<int>();
    if (bits < kMinPrecisionBits || bits > kMaxPrecisionBits) throw ConfigInvalid("precision_bits", "out of range");
    const json& s = doc.at("schedule");
    if (s.at("kind").get<std::string>() != "geometric") throw ConfigInvalid("schedule.kind", "unsupported");
    const auto real = [&](const json& j) { return Fixed::from_decimal(j.get<std::string>(), bits); };
    return CantorParams{doc.at("m").get<int>(), real(doc.at("tau")), real(doc.at("phi")),
                        GapSchedule(real(s.at("params").at("ratio")), real(s.at("params").at("mass"))),
                        doc.at("depth").get<int>()};
  } catch (const json::exception& e) {
    throw ConfigInvalid("<cantor>", e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigInvalid("<cantor>", e.what());
  }
}

}  // namespace denjoy
