#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "denjoy/render.hpp"
#include "denjoy/verify.hpp"

namespace denjoy {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitCheckFailed = 2,
  kExitBudget = 3,
};

inline constexpr const char* kOrbitSchema = "denjoy.orbit/1";
inline constexpr const char* kRotnumSchema = "denjoy.rotnum/1";

/// Shared options. An empty `out` means stdout.
struct CommonOptions {
  double eps = 1e-30;
  std::uint64_t seed = 1;
  std::optional<int> precision_bits;
  std::string out;
  std::optional<double> budget;
};

std::string read_text_file(const std::string& path);

/// Loads an artifact and applies a precision override, if any.
BuildConfig load_artifact_file(const std::string& path, const std::optional<int>& precision_bits);

// Each command reports errors on `err` and returns an ExitCode.

int cmd_build(const std::string& config_path, const CommonOptions& common, std::ostream& out, std::ostream& err);

int cmd_verify(const std::string& artifact_path, VerifyOptions options, const CommonOptions& common,
               std::ostream& out, std::ostream& err);

struct OrbitRequest {
  std::string theta;
  std::optional<std::string> rho;
  int steps = 0;
};
int cmd_orbit(const std::string& artifact_path, const OrbitRequest& request, const CommonOptions& common,
              std::ostream& out, std::ostream& err);

/// Orbit CSV text for an already loaded config; throws on error.
std::string orbit_csv(const BuildConfig& config, const OrbitRequest& request, double eps,
                      std::optional<double> budget);

int cmd_rotnum(const std::string& artifact_path, const std::string& theta, std::int64_t N, const CommonOptions& common,
               std::ostream& out, std::ostream& err);

/// Rotation-number JSON for an already loaded config; throws on error.
std::string rotnum_json(const BuildConfig& config, const std::string& theta, std::int64_t N, double eps,
                        std::optional<double> budget);

int cmd_render(const std::string& artifact_path, const std::string& what, RenderParams params,
               const CommonOptions& common, std::ostream& out, std::ostream& err);

}  // namespace denjoy
