#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tamp1d/norms.hpp"
#include "tamp1d/step_function.hpp"

namespace tamp1d {

/// Cells of width 1/resolution on [0, 1] carrying x sin^2(2 pi x) at the cell
/// midpoint, rounded to a multiple of 2^-30.
StepFunction xsin2_step(std::size_t resolution);

struct PlotPoint {
  double x;
  double y;
};

/// Exact breakpoint list: (x_0, 0), then (lo, v), (hi, v) for every piece, then (end, 0).
std::vector<PlotPoint> step_outline(const StepFunction& fn);

/// samples >= 2 equispaced points on [0, support_end].
std::vector<PlotPoint> sample_curve(const PiecewiseLinear& fn, std::size_t samples);

/// Header "x,y", 12 significant digits.
std::string to_csv(const std::vector<PlotPoint>& points);

/// 800x400 SVG 1.1 with both axes and a single polyline.
std::string to_svg(const std::vector<PlotPoint>& points);

}  // namespace tamp1d
