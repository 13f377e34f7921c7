#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tamp1d/intervals.hpp"
#include "tamp1d/step_function.hpp"

namespace tamp1d {

/// Column numbers of a voxel grid start at 1; columns 0 and n+1 read as
/// empty.
using Column = std::size_t;

/// Column-monotone voxel pile on an n x n grid with cells of size
/// cell_width x cell_height. Column i spans [(i-1) w, i w) and holds
/// heights[i-1] voxels stacked from the axis.
class VoxelFunction {
 public:
  explicit VoxelFunction(std::vector<int> heights, Rational cell_width = Rational(1),
                         Rational cell_height = Rational(1));

  std::size_t n() const { return heights_.size(); }
  const std::vector<int>& heights() const { return heights_; }
  /// Height of a 1-based column, 0 outside [1, n].
  int height(Column column) const;
  const Rational& cell_width() const { return cell_width_; }
  const Rational& cell_height() const { return cell_height_; }

  /// N = sum_i i * h_i, the termination potential of the tamping loop.
  long long moment() const;

  friend bool operator==(const VoxelFunction&, const VoxelFunction&) = default;

 private:
  std::vector<int> heights_;
  Rational cell_width_;
  Rational cell_height_;
};

/// H_level(phi): union over real l < level of the hollows of {phi >= l}.
IntervalSet hollows(const StepFunction& fn, const Rational& level);
/// H_inf(phi): union over every level.
IntervalSet hollows(const StepFunction& fn);

/// x_nu and y_nu; std::nullopt stands for +inf (empty superlevel set).
struct LevelAnchor {
  std::optional<Rational> x;
  std::optional<Rational> y;
};

LevelAnchor level_anchor(const StepFunction& fn, const Rational& level);

/// Rearrangement by tamping through its superlevel sets
/// {phi_tamped >= nu} = [y_nu, y_nu + meas{phi >= nu}].
StepFunction tamp(const StepFunction& fn);

/// The same rearrangement through the reflected/shifted pair of Schwarz
/// rearrangements of phi 1_{phi = phi_dagger} and phi 1_{phi != phi_dagger},
/// glued at sigma(phi). Throws for the zero function.
StepFunction tamp_double_schwarz(const StepFunction& fn);

/// Voxelization on an n x n grid sized to cover the support and range of fn.
VoxelFunction step_to_voxel(const StepFunction& fn, std::size_t n);
/// Voxelization on an explicit grid; requires support <= n w and max <= n h.
VoxelFunction step_to_voxel(const StepFunction& fn, std::size_t n, const Rational& cell_width,
                            const Rational& cell_height);

/// Lossless voxelization on the coarsest grid aligned with every cut and
/// value. Throws std::length_error when the grid would exceed max_n.
VoxelFunction exact_voxelization(const StepFunction& fn, std::size_t max_n = 4096);

StepFunction voxel_to_step(const VoxelFunction& voxels);

/// Strict local minima eligible as pivots: h_xi < h_{xi+1} and some column
/// left of xi is strictly taller than every column in between (xi included).
std::vector<Column> pivot_set(const VoxelFunction& voxels);

/// Smallest eta >= xi + 1 with h_{eta-1} > h_xi >= h_eta.
Column eta(const VoxelFunction& voxels, Column pivot);

/// Slides the columns xi+1 .. eta-1 one step left above height h_xi.
VoxelFunction elementary_tamp(const VoxelFunction& voxels, Column pivot);

enum class PivotPolicy { Leftmost, Rightmost, Random };

struct TampOptions {
  PivotPolicy policy = PivotPolicy::Leftmost;
  std::uint64_t seed = 0;       // used by PivotPolicy::Random
  bool record_heights = true;   // store the heights after every step
};

struct TampingStep {
  Column pivot;
  Column eta;
  std::vector<int> heights;  // empty unless TampOptions::record_heights
};

struct TampingTrace {
  std::vector<TampingStep> steps;
  std::vector<long long> invariant_n;  // N before the first step and after each step
};

struct VoxelTampResult {
  VoxelFunction voxels;
  TampingTrace trace;
};

VoxelTampResult tamp_voxel(const VoxelFunction& voxels, const TampOptions& options = {});

}  // namespace tamp1d
