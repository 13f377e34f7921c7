#include "tamp1d/plot.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tamp1d {

StepFunction xsin2_step(std::size_t resolution) {
  if (resolution == 0) throw std::invalid_argument("resolution must be positive");
  const double scale = std::ldexp(1.0, 30);
  std::vector<Rational> values;
  values.reserve(resolution);
  for (std::size_t i = 0; i < resolution; ++i) {
    const double x = (static_cast<double>(i) + 0.5) / static_cast<double>(resolution);
    const double s = std::sin(2 * std::numbers::pi * x);
    const double y = std::max(0.0, x * s * s);
    Rational v(static_cast<long>(std::llround(y * scale)), 1L << 30);
    v.canonicalize();
    values.push_back(std::move(v));
  }
  return StepFunction::from_cells(Rational(1, static_cast<unsigned long>(resolution)), values);
}

std::vector<PlotPoint> step_outline(const StepFunction& fn) {
  std::vector<PlotPoint> points;
  points.push_back({0.0, 0.0});
  for (const auto& p : fn.pieces()) {
    const double v = to_double(p.value);
    points.push_back({to_double(p.lo), v});
    points.push_back({to_double(p.hi), v});
  }
  points.push_back({to_double(fn.support_end()), 0.0});
  return points;
}

std::vector<PlotPoint> sample_curve(const PiecewiseLinear& fn, std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  std::vector<PlotPoint> points;
  points.reserve(samples);
  const Rational end = fn.support_end();
  for (std::size_t i = 0; i < samples; ++i) {
    Rational x = end * Rational(static_cast<unsigned long>(i), static_cast<unsigned long>(samples - 1));
    points.push_back({to_double(x), to_double(fn(x))});
  }
  return points;
}

std::string to_csv(const std::vector<PlotPoint>& points) {
  std::string out = "x,y\n";
  for (const auto& p : points) {
    out += format_significant(p.x) + "," + format_significant(p.y) + "\n";
  }
  return out;
}

std::string to_svg(const std::vector<PlotPoint>& points) {
  constexpr double width = 800, height = 400, margin = 40;
  double x_max = 0, y_max = 0;
  for (const auto& p : points) {
    x_max = std::max(x_max, p.x);
    y_max = std::max(y_max, p.y);
  }
  if (x_max == 0) x_max = 1;
  if (y_max == 0) y_max = 1;
  const auto sx = [&](double x) { return margin + x / x_max * (width - 2 * margin); };
  const auto sy = [&](double y) { return height - margin - y / y_max * (height - 2 * margin); };

  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"400\" "
      "viewBox=\"0 0 800 400\">\n";
  out += "  <line x1=\"" + format_significant(margin) + "\" y1=\"" + format_significant(sy(0)) +
         "\" x2=\"" + format_significant(width - margin) + "\" y2=\"" + format_significant(sy(0)) +
         "\" stroke=\"black\"/>\n";
  out += "  <line x1=\"" + format_significant(sx(0)) + "\" y1=\"" + format_significant(height - margin) +
         "\" x2=\"" + format_significant(sx(0)) + "\" y2=\"" + format_significant(margin) +
         "\" stroke=\"black\"/>\n";
  out += "  <polyline fill=\"none\" stroke=\"steelblue\" points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ' ';
    out += format_significant(sx(points[i].x), 8) + "," + format_significant(sy(points[i].y), 8);
  }
  out += "\"/>\n</svg>\n";
  return out;
}

}  // namespace tamp1d
