#include "denjoy/commands.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "denjoy/artifact.hpp"
#include "denjoy/errors.hpp"
#include "denjoy/planar.hpp"

namespace denjoy {

using nlohmann::json;

namespace {

// Writes to `path` via a temporary so a failed command never leaves a file.
void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  const std::string tmp = path + ".partial";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    if (!f.flush()) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing " + path);
    }
  }
  std::filesystem::rename(tmp, path);
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ErrorBudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ConfigInvalid& e) {
    err << "error: invalid config: " << e.what() << '\n';
  } catch (const PrecisionCollision& e) {
    err << "error: precision collision: " << e.what() << '\n';
  } catch (const DepthExceeded& e) {
    err << "error: depth exceeded: " << e.what() << '\n';
  } catch (const UnsupportedRender& e) {
    err << "error: unsupported render: " << e.what() << '\n';
  } catch (const NegativeRadius& e) {
    err << "error: negative radius: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ',';
    row += cells[i];
  }
  return row + '\n';
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

BuildConfig load_artifact_file(const std::string& path, const std::optional<int>& precision_bits) {
  BuildConfig config = load_artifact(read_text_file(path));
  if (precision_bits) {
    config.precision_bits = *precision_bits;
    validate(config);
  }
  return config;
}

int cmd_build(const std::string& config_path, const CommonOptions& common, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    BuildConfig config = parse_config(read_text_file(config_path));
    if (common.precision_bits) config.precision_bits = *common.precision_bits;
    validate(config);
    if (config.schedule.mass != "1" &&
        Fixed::from_decimal(config.schedule.mass, config.precision_bits) != Fixed::from_int(1, config.precision_bits)) {
      err << "warning: schedule.mass " << config.schedule.mass
          << " != 1; the limit set has positive measure and verify will fail the measure check\n";
    }
    write_output(common.out, build_artifact(config), out);
    return static_cast<int>(kExitOk);
  });
}

int cmd_verify(const std::string& artifact_path, VerifyOptions options, const CommonOptions& common,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BuildConfig config = load_artifact_file(artifact_path, common.precision_bits);
    options.eps = common.eps;
    options.seed = common.seed;
    options.budget = common.budget;
    const VerifyReport report = run_verify(config, options);
    write_output(common.out, report.to_json(), out);
    for (const CheckResult& c : report.checks) {
      if (!c.pass) err << "FAIL " << c.name << ": residual " << c.residual << " > bound " << c.bound << '\n';
    }
    return static_cast<int>(report.pass ? kExitOk : kExitCheckFailed);
  });
}

std::string orbit_csv(const BuildConfig& config, const OrbitRequest& request, double eps,
                      std::optional<double> budget) {
  if (request.steps < 1) throw std::invalid_argument("steps must be >= 1");
  const int bits = config.precision_bits;
  const CirclePoint theta = CirclePoint::from_decimal(request.theta, bits);
  const DenjoyMap f(to_cantor_params(config));
  const auto dec = [](const Fixed& v) { return v.to_decimal(kDecimalDigits); };

  std::string csv;
  if (request.rho) {
    const AdmissibleMap h(f, default_pi_coefficient, Fixed::from_decimal(config.pi_cap, bits));
    const PlanarTrace t =
        h.planar_orbit({theta, Fixed::from_decimal(*request.rho, bits)}, request.steps, eps, budget);
    csv = csv_row({"schema", "step", "theta", "rho", "lift", "error_bound"});
    for (std::size_t j = 0; j < t.points.size(); ++j) {
      csv += csv_row({kOrbitSchema, std::to_string(j), dec(t.points[j].theta.angle()), dec(t.points[j].rho),
                      dec(t.lift_values[j]), format_sci(t.step_bounds[j])});
    }
  } else {
    const OrbitTrace t = f.orbit(theta, request.steps, eps, budget);
    csv = csv_row({"schema", "step", "theta", "lift", "error_bound"});
    for (std::size_t j = 0; j < t.points.size(); ++j) {
      csv += csv_row({kOrbitSchema, std::to_string(j), dec(t.points[j].angle()), dec(t.lift_values[j]),
                      format_sci(t.step_bounds[j])});
    }
  }
  return csv;
}

int cmd_orbit(const std::string& artifact_path, const OrbitRequest& request, const CommonOptions& common,
              std::ostream& out, std::ostream& err) {
  if (request.steps < 1) {
    err << "error: steps must be >= 1\n";
    return kExitUsage;
  }
  return guarded(err, [&] {
    const BuildConfig config = load_artifact_file(artifact_path, common.precision_bits);
    write_output(common.out, orbit_csv(config, request, common.eps, common.budget), out);
    return static_cast<int>(kExitOk);
  });
}

std::string rotnum_json(const BuildConfig& config, const std::string& theta, std::int64_t N, double eps,
                        std::optional<double> budget) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  const int bits = config.precision_bits;
  const DenjoyMap f(to_cantor_params(config));
  const CirclePoint start = CirclePoint::from_decimal(theta, bits);
  const RotationEstimate est = f.rotation_number(start, N, eps, budget);
  json doc = {
      {"schema", kRotnumSchema},
      {"estimate", est.estimate.to_decimal(kDecimalDigits)},
      {"bound", est.bound},
      {"accumulated_error", est.accumulated_error},
      {"N", N},
      {"theta", start.angle().to_decimal(kDecimalDigits)},
      {"eps", eps},
  };
  return doc.dump(2) + "\n";
}

int cmd_rotnum(const std::string& artifact_path, const std::string& theta, std::int64_t N, const CommonOptions& common,
               std::ostream& out, std::ostream& err) {
  if (N < 1) {
    err << "error: N must be >= 1\n";
    return kExitUsage;
  }
  return guarded(err, [&] {
    const BuildConfig config = load_artifact_file(artifact_path, common.precision_bits);
    write_output(common.out, rotnum_json(config, theta, N, common.eps, common.budget), out);
    return static_cast<int>(kExitOk);
  });
}

int cmd_render(const std::string& artifact_path, const std::string& what, RenderParams params,
               const CommonOptions& common, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BuildConfig config = load_artifact_file(artifact_path, common.precision_bits);
    params.eps = common.eps;
    write_output(common.out, render_svg(config, what, params), out);
    return static_cast<int>(kExitOk);
  });
}

}  // namespace denjoy
