#pragma once

#include <string>
#include <string_view>

#include "denjoy/config.hpp"

namespace denjoy {

struct RenderParams {
  /// Highest stage drawn by "stages" (A_0 .. A_j).
  int stages = 2;
  /// Grid resolution of the "cantor-function" staircase.
  int samples = 512;
  /// Start point and length of the "planar-orbit" trace.
  std::string theta = "0.1";
  std::string rho = "1.5";
  int steps = 200;
  double eps = 1e-30;
};

/// SVG 1.1 text for what in {stages, cantor-function, planar-orbit}.
/// Byte-stable for fixed inputs. Throws UnsupportedRender otherwise.
std::string render_svg(const BuildConfig& config, std::string_view what, const RenderParams& params);

}  // namespace denjoy
