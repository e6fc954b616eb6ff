#include <algorithm>
#include <iostream>

#include <CLI11.hpp>

#include "denjoy/commands.hpp"

namespace {

void add_common(CLI::App& cmd, denjoy::CommonOptions& common) {
  cmd.add_option("--eps", common.eps, "Working tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  cmd.add_option("--seed", common.seed, "Sampler seed")->capture_default_str();
  cmd.add_option("--precision-bits", common.precision_bits, "Override fractional bits (64..448)");
  cmd.add_option("--out", common.out, "Output file (default: stdout)");
  cmd.add_option("--budget", common.budget, "Abort when an orbit error bound exceeds this")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Z_m-equivariant Denjoy maps and their planar extensions"};
  app.require_subcommand(1);
  denjoy::CommonOptions common;
  int code = denjoy::kExitOk;

  std::string config_path;
  auto* build = app.add_subcommand("build", "Validate a config and write its artifact");
  build->add_option("config", config_path, "Config JSON")->required();
  add_common(*build, common);
  build->callback([&] { code = denjoy::cmd_build(config_path, common, std::cout, std::cerr); });

  std::string artifact;
  denjoy::VerifyOptions verify_options;
  std::vector<std::string> suites;
  auto* verify = app.add_subcommand("verify", "Run the verification suites against an artifact");
  verify->add_option("artifact", artifact, "Artifact JSON")->required();
  verify->add_option("--suite", suites, "Suites to run (cantor, denjoy, planar); default all")
      ->check(CLI::IsMember({"cantor", "denjoy", "planar"}));
  verify->add_option("--samples", verify_options.samples, "Samples per sampled check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--rotation-steps", verify_options.rotation_steps, "Iterations for the rotation number")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_flag("--timings", verify_options.timings, "Include per-check durations");
  add_common(*verify, common);
  verify->callback([&] {
    if (!suites.empty()) {
      const auto has = [&](const char* s) { return std::find(suites.begin(), suites.end(), s) != suites.end(); };
      verify_options.cantor = has("cantor");
      verify_options.denjoy = has("denjoy");
      verify_options.planar = has("planar");
    }
    code = denjoy::cmd_verify(artifact, verify_options, common, std::cout, std::cerr);
  });

  denjoy::OrbitRequest orbit_request;
  std::string rho;
  auto* orbit = app.add_subcommand("orbit", "Write an orbit as CSV");
  orbit->add_option("artifact", artifact, "Artifact JSON")->required();
  orbit->add_option("--theta", orbit_request.theta, "Start angle in turns")->required();
  auto* rho_opt = orbit->add_option("--rho", rho, "Start radius; selects the planar map");
  orbit->add_option("--steps", orbit_request.steps, "Number of iterations (>= 1)")->required();
  add_common(*orbit, common);
  orbit->callback([&] {
    if (*rho_opt) orbit_request.rho = rho;
    code = denjoy::cmd_orbit(artifact, orbit_request, common, std::cout, std::cerr);
  });

  std::string theta = "0";
  std::int64_t N = 10000;
  auto* rotnum = app.add_subcommand("rotnum", "Estimate the rotation number with a rigorous bound");
  rotnum->add_option("artifact", artifact, "Artifact JSON")->required();
  rotnum->add_option("--theta", theta, "Start angle in turns")->capture_default_str();
  rotnum->add_option("-N,--iterations", N, "Iterations (>= 1)")->capture_default_str();
  add_common(*rotnum, common);
  rotnum->callback([&] { code = denjoy::cmd_rotnum(artifact, theta, N, common, std::cout, std::cerr); });

  std::string what;
  denjoy::RenderParams render_params;
  auto* render = app.add_subcommand("render", "Render an SVG figure");
  render->add_option("artifact", artifact, "Artifact JSON")->required();
  render->add_option("what", what, "stages | cantor-function | planar-orbit")->required();
  render->add_option("--stages", render_params.stages, "Highest stage for 'stages'")->capture_default_str();
  render->add_option("--samples", render_params.samples, "Grid size for 'cantor-function'")->capture_default_str();
  render->add_option("--theta", render_params.theta, "Start angle for 'planar-orbit'")->capture_default_str();
  render->add_option("--rho", render_params.rho, "Start radius for 'planar-orbit'")->capture_default_str();
  render->add_option("--steps", render_params.steps, "Steps for 'planar-orbit'")->capture_default_str();
  add_common(*render, common);
  render->callback([&] { code = denjoy::cmd_render(artifact, what, render_params, common, std::cout, std::cerr); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : denjoy::kExitUsage;
  }
  return code;
}
