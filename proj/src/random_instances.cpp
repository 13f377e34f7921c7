#include "tamp1d/random_instances.hpp"

#include <stdexcept>
#include <vector>

namespace tamp1d {

Rational random_rational(Rng& rng, long lo, long hi, long denominator) {
  if (lo > hi || denominator <= 0) throw std::invalid_argument("empty sampling range");
  std::uniform_int_distribution<long> pick(lo, hi);
  Rational r(pick(rng), denominator);
  r.canonicalize();
  return r;
}

StepFunction random_step_function(Rng& rng, const StepSampling& sampling) {
  std::uniform_int_distribution<std::size_t> count(1, sampling.max_pieces);
  std::bernoulli_distribution gap(sampling.zero_probability);
  const long den = sampling.coordinate_denominator;
  const std::size_t k = count(rng);
  std::vector<Piece> pieces;
  Rational x = random_rational(rng, 0, den, den);
  for (std::size_t i = 0; i < k; ++i) {
    Rational width = random_rational(rng, 1, sampling.max_width * den, den);
    Rational value = gap(rng) ? Rational(0)
                              : random_rational(rng, 1, sampling.max_value * sampling.value_denominator,
                                                sampling.value_denominator);
    Rational next = x + width;
    pieces.push_back({x, next, std::move(value)});
    x = std::move(next);
  }
  return StepFunction::from_pieces(std::move(pieces));
}

VoxelFunction random_voxels(Rng& rng, std::size_t min_n, std::size_t max_n) {
  if (min_n < 1 || min_n > max_n) throw std::invalid_argument("bad voxel size range");
  std::uniform_int_distribution<std::size_t> size(min_n, max_n);
  const std::size_t n = size(rng);
  std::uniform_int_distribution<int> height(0, static_cast<int>(n));
  std::vector<int> heights(n);
  for (auto& h : heights) h = height(rng);
  return VoxelFunction(std::move(heights));
}

}  // namespace tamp1d
