#pragma once

#include <vector>

#include "tamp1d/intervals.hpp"
#include "tamp1d/step_function.hpp"
#include "tamp1d/tamping.hpp"

namespace tamp1d {

/// Continuous piecewise-linear function with node k at x = k * grid_step,
/// extended by zero past the last node. The last node must be 0 so that the
/// extension stays continuous.
class PiecewiseLinear {
 public:
  PiecewiseLinear(Rational grid_step, std::vector<Rational> nodes);

  const Rational& grid_step() const { return grid_step_; }
  const std::vector<Rational>& nodes() const { return nodes_; }
  Rational support_end() const;
  Rational operator()(const Rational& x) const;

 private:
  Rational grid_step_;
  std::vector<Rational> nodes_;
};

/// Lambda: nodes 0, mu h_1, ..., mu h_n, 0 spaced by the cell width.
PiecewiseLinear linear_interpolate(const VoxelFunction& voxels);

/// int |f'|^p, i.e. sum |node_{k+1} - node_k|^p / grid_step^(p-1).
double w1p_halfnorm_pow(const PiecewiseLinear& fn, double p);
double w1p_halfnorm(const PiecewiseLinear& fn, double p);

/// H_inf of the continuous function: points where f is strictly below both
/// its supremum to the left and its supremum to the right.
IntervalSet hollows(const PiecewiseLinear& fn);

/// int over hollows(fn) of |f'|^p.
double hollows_gradient_integral(const PiecewiseLinear& fn, double p);

/// ||f - g||_p for a piecewise-linear f and a step function g.
double lp_distance(const PiecewiseLinear& f, const StepFunction& g, double p);

/// Decrease of int |(Lambda V)'|^p caused by one elementary tamping.
double elementary_residual(const VoxelFunction& voxels, Column pivot, double p);

/// (|h_xi - h_{xi-1}|^p + |h_{xi+1} - h_xi|^p - |h_{xi+1} - h_{xi-1}|^p),
/// rescaled to the cell size. Never exceeds elementary_residual.
double elementary_residual_bound(const VoxelFunction& voxels, Column pivot, double p);

/// Gagliardo half-norm (squared) for 0 < s < 1/2:
///   int int_{x < y} |phi(x) - phi(y)|^2 / |x - y|^(1 + 2s) dx dy,
/// phi extended by zero to the whole line. Evaluated in closed form pair of
/// pieces by pair of pieces, summed in (i, j) lexicographic order.
double hs_halfnorm(const StepFunction& fn, double s);

}  // namespace tamp1d
