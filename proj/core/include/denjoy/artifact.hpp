#pragma once

#include <string>
#include <string_view>

#include "denjoy/config.hpp"

namespace denjoy {

inline constexpr const char* kArtifactSchema = "denjoy.artifact/1";
inline constexpr const char* kCantorSchema = "denjoy.cantor/1";

/// Canonical artifact text: the config plus constants derived from it
/// (truncation-depth table, tail bounds, model resolution, bump scale).
/// Gap tables are not stored; they are rebuilt on load. Same config gives
/// the same bytes. Throws ConfigInvalid or PrecisionCollision.
std::string build_artifact(const BuildConfig& config);

/// Reads the config back out of an artifact and re-validates it.
BuildConfig load_artifact(std::string_view text);

/// Serialized construction parameters, tau written as an exact decimal.
std::string cantor_to_json(const CantorApprox& cantor);
CantorParams cantor_params_from_json(std::string_view text);

/// Decimal width used for every exported coordinate.
inline constexpr int kDecimalDigits = 40;

}  // namespace denjoy
