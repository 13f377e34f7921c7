#pragma once

#include <cstddef>
#include <random>

#include "tamp1d/step_function.hpp"
#include "tamp1d/tamping.hpp"

namespace tamp1d {

using Rng = std::mt19937_64;

/// Uniform k / denominator with k in [lo, hi].
Rational random_rational(Rng& rng, long lo, long hi, long denominator);

struct StepSampling {
  std::size_t max_pieces = 8;
  long coordinate_denominator = 4;  // widths are multiples of 1/coordinate_denominator
  long max_width = 3;               // in whole units
  long value_denominator = 2;
  long max_value = 4;               // in whole units; few levels so ties are common
  double zero_probability = 0.2;    // chance that a piece is a gap
};

StepFunction random_step_function(Rng& rng, const StepSampling& sampling = {});

/// n uniform in [min_n, max_n], heights uniform in [0, n].
VoxelFunction random_voxels(Rng& rng, std::size_t min_n, std::size_t max_n);

}  // namespace tamp1d
