#include "denjoy/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "denjoy/errors.hpp"
#include "denjoy/planar.hpp"

namespace denjoy {

namespace {

constexpr double kSize = 600.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string header(const std::string& title) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kSize) << "\" height=\""
     << num(kSize) << "\" viewBox=\"0 0 " << num(kSize) << ' ' << num(kSize) << "\">\n"
     << "<title>" << title << "</title>\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

// Angle t in turns, counter-clockwise from the positive x axis (SVG y is down).
std::pair<double, double> polar(double t, double r) {
  const double a = 2.0 * std::numbers::pi * t;
  return {kSize / 2 + r * std::cos(a), kSize / 2 - r * std::sin(a)};
}

std::string arc_path(double from, double length, double r) {
  const auto [x0, y0] = polar(from, r);
  std::ostringstream os;
  if (length >= 1.0 - 1e-12) {
    const auto [x1, y1] = polar(from + 0.5, r);
    os << "M " << num(x0) << ' ' << num(y0) << " A " << num(r) << ' ' << num(r) << " 0 1 0 " << num(x1) << ' '
       << num(y1) << " A " << num(r) << ' ' << num(r) << " 0 1 0 " << num(x0) << ' ' << num(y0);
    return os.str();
  }
  const auto [x1, y1] = polar(from + length, r);
  os << "M " << num(x0) << ' ' << num(y0) << " A " << num(r) << ' ' << num(r) << " 0 " << (length > 0.5 ? 1 : 0)
     << " 0 " << num(x1) << ' ' << num(y1);
  return os.str();
}

std::string render_stages(const CantorApprox& c, const RenderParams& p) {
  if (p.stages < 0 || p.stages > std::min(c.depth(), 12)) {
    throw UnsupportedRender("stages must lie in [0, " + std::to_string(std::min(c.depth(), 12)) + "]");
  }
  std::ostringstream os;
  os << header("Stages A_0 to A_" + std::to_string(p.stages) + ", m=" + std::to_string(c.m()));
  const double outer = kSize * 0.45;
  const double step = p.stages > 0 ? outer * 0.6 / p.stages : 0.0;
  for (int j = 0; j <= p.stages; ++j) {
    const double r = outer - step * j;
    os << "<g id=\"stage-" << j << "\" fill=\"none\" stroke=\"black\" stroke-width=\"4\">\n";
    for (const Arc& a : c.stage(j, p.eps)) {
      os << "<path d=\"" << arc_path(a.from().angle().to_double(), a.length().to_double(), r) << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_cantor_function(const CantorApprox& c, const RenderParams& p) {
  if (p.samples < 2 || p.samples > 100000) throw UnsupportedRender("samples must lie in [2, 100000]");
  const double margin = 40.0;
  const double span = kSize - 2 * margin;
  std::ostringstream os;
  os << header("Cantor function P, m=" + std::to_string(c.m()));
  os << "<rect x=\"" << num(margin) << "\" y=\"" << num(margin) << "\" width=\"" << num(span) << "\" height=\""
     << num(span) << "\" fill=\"none\" stroke=\"gray\"/>\n";
  os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (int i = 0; i <= p.samples; ++i) {
    const Fixed y = Fixed::from_ratio(i, p.samples, c.bits());
    // P(1) is the lift value 1 rather than its class 0.
    const double x = i == p.samples ? 1.0 : c.cantor_function(CirclePoint(y), p.eps).angle().to_double();
    if (i) os << ' ';
    os << num(margin + span * y.to_double()) << ',' << num(margin + span * (1.0 - x));
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

std::string render_planar_orbit(const BuildConfig& config, const RenderParams& p) {
  if (p.steps < 1 || p.steps > 100000) throw UnsupportedRender("steps must lie in [1, 100000]");
  const int bits = config.precision_bits;
  const AdmissibleMap h(DenjoyMap(to_cantor_params(config)), default_pi_coefficient,
                        Fixed::from_decimal(config.pi_cap, bits));
  const PlanarPoint start{CirclePoint::from_decimal(p.theta, bits), Fixed::from_decimal(p.rho, bits)};
  const PlanarTrace t = h.planar_orbit(start, p.steps, p.eps);
  double rmax = 1.0;
  for (const PlanarPoint& q : t.points) rmax = std::max(rmax, q.rho.to_double());
  const double scale = kSize * 0.45 / rmax;
  std::ostringstream os;
  os << header("Planar orbit, " + std::to_string(p.steps) + " steps");
  os << "<circle cx=\"" << num(kSize / 2) << "\" cy=\"" << num(kSize / 2) << "\" r=\"" << num(scale)
     << "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  os << "<g fill=\"black\">\n";
  for (const PlanarPoint& q : t.points) {
    const auto [x, y] = polar(q.theta.angle().to_double(), scale * q.rho.to_double());
    os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"1.5\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace

std::string render_svg(const BuildConfig& config, std::string_view what, const RenderParams& params) {
  if (what == "stages") return render_stages(CantorApprox(to_cantor_params(config)), params);
  if (what == "cantor-function") return render_cantor_function(CantorApprox(to_cantor_params(config)), params);
  if (what == "planar-orbit") return render_planar_orbit(config, params);
  throw UnsupportedRender("unknown render target \"" + std::string(what) + "\"");
}

}  // namespace denjoy
