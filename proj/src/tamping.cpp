#include "tamp1d/tamping.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace tamp1d {

VoxelFunction::VoxelFunction(std::vector<int> heights, Rational cell_width, Rational cell_height)
    : heights_(std::move(heights)),
      cell_width_(std::move(cell_width)),
      cell_height_(std::move(cell_height)) {
  if (cell_width_ <= 0 || cell_height_ <= 0) {
    throw std::invalid_argument("voxel cells must have positive size");
  }
  const int n = static_cast<int>(heights_.size());
  for (int h : heights_) {
    if (h < 0 || h > n) {
      throw std::invalid_argument("column height " + std::to_string(h) + " outside [0, " +
                                  std::to_string(n) + "]");
    }
  }
}

int VoxelFunction::height(Column column) const {
  if (column < 1 || column > heights_.size()) return 0;
  return heights_[column - 1];
}

long long VoxelFunction::moment() const {
  long long total = 0;
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    total += static_cast<long long>(i + 1) * heights_[i];
  }
  return total;
}

// ---------------------------------------------------------------------------
// Level-set route

namespace {

IntervalSet hollows_below(const StepFunction& fn, const Rational* level) {
  // {phi >= lambda} for lambda in (l_{k-1}, l_k] is the superlevel set at l_k,
  // so l_k contributes as soon as l_{k-1} < level.
  std::vector<IntervalSet::Bounds> gaps;
  Rational below = 0;
  for (const auto& l : fn.levels()) {
    if (level && !(below < *level)) break;
    below = l;
    const IntervalSet set_gaps = hollows_of_set(superlevel(fn, l));
    for (const auto& gap : set_gaps.parts()) {
      gaps.emplace_back(gap.lo, gap.hi);
    }
  }
  return IntervalSet::from_bounds(std::move(gaps));
}

struct Layer {
  Rational level;
  Rational lo;
  Rational hi;
};

// sum_k (level_k - level_{k-1}) 1_[lo_k, hi_k) for ascending levels.
StepFunction layer_cake_sum(const std::vector<Layer>& layers) {
  std::map<Rational, Rational> jumps;
  Rational previous = 0;
  for (const auto& layer : layers) {
    Rational step = layer.level - previous;
    previous = layer.level;
    if (layer.lo == layer.hi) continue;
    jumps[layer.lo] += step;
    jumps[layer.hi] -= step;
  }
  std::vector<Piece> pieces;
  Rational value = 0;
  const Rational* start = nullptr;
  for (const auto& [x, delta] : jumps) {
    if (start && value != 0) pieces.push_back({*start, x, value});
    value += delta;
    start = &x;
  }
  return StepFunction::from_pieces(std::move(pieces));
}

}  // namespace

IntervalSet hollows(const StepFunction& fn, const Rational& level) { return hollows_below(fn, &level); }

IntervalSet hollows(const StepFunction& fn) { return hollows_below(fn, nullptr); }

LevelAnchor level_anchor(const StepFunction& fn, const Rational& level) {
  IntervalSet set = superlevel(fn, level);
  if (set.empty()) return {};
  const Rational& x = set.front().lo;
  return {x, x - measure_within(hollows(fn), Rational(0), x)};
}

StepFunction tamp(const StepFunction& fn) {
  const IntervalSet holes = hollows(fn);
  std::vector<Layer> layers;
  for (const auto& level : fn.levels()) {
    IntervalSet set = superlevel(fn, level);
    const Rational& x = set.front().lo;
    Rational y = x - measure_within(holes, Rational(0), x);
    Rational top = y + measure(set);
    layers.push_back({level, std::move(y), std::move(top)});
  }
  return layer_cake_sum(layers);
}

// ---------------------------------------------------------------------------
// Double Schwarz route

StepFunction tamp_double_schwarz(const StepFunction& fn) {
  const ArgmaxAnchors anchors = s_sigma(fn);

  std::vector<Piece> on_bound;   // phi 1_{phi = phi_dagger}
  std::vector<Piece> off_bound;  // phi 1_{phi != phi_dagger}
  Rational running = 0;
  for (const auto& piece : fn.pieces()) {
    if (piece.value > running) running = piece.value;
    (piece.value == running ? on_bound : off_bound).push_back(piece);
  }
  const StepFunction rising = schwarz(StepFunction::from_pieces(std::move(on_bound)));
  const StepFunction falling = schwarz(StepFunction::from_pieces(std::move(off_bound)));

  std::vector<Piece> pieces;
  for (const auto& p : rising.support_pieces()) {
    pieces.push_back({anchors.sigma - p.hi, anchors.sigma - p.lo, p.value});
  }
  for (const auto& p : falling.support_pieces()) {
    pieces.push_back({anchors.sigma + p.lo, anchors.sigma + p.hi, p.value});
  }
  return StepFunction::from_pieces(std::move(pieces));
}

// ---------------------------------------------------------------------------
// Voxel route

VoxelFunction step_to_voxel(const StepFunction& fn, std::size_t n, const Rational& cell_width,
                            const Rational& cell_height) {
  if (n < 1) throw std::invalid_argument("grid size must be at least 1");
  const Rational grid_n(static_cast<unsigned long>(n));
  if (fn.support_end() > grid_n * cell_width) {
    throw std::invalid_argument("support does not fit in the voxel grid");
  }
  if (fn.max_value() > grid_n * cell_height) {
    throw std::invalid_argument("range does not fit in the voxel grid");
  }
  // Cell (i, j) meets the hypograph in positive measure iff the essential
  // supremum over column i exceeds (j - 1) * cell_height.
  std::vector<int> heights(n, 0);
  const auto pieces = fn.support_pieces();
  std::size_t first = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational lo = cell_width * static_cast<unsigned long>(i);
    Rational hi = lo + cell_width;
    while (first < pieces.size() && pieces[first].hi <= lo) ++first;
    Rational column_sup = 0;
    for (std::size_t k = first; k < pieces.size() && pieces[k].lo < hi; ++k) {
      if (pieces[k].value > column_sup) column_sup = pieces[k].value;
    }
    heights[i] = static_cast<int>(ceil(column_sup / cell_height).get_num().get_si());
  }
  return VoxelFunction(std::move(heights), cell_width, cell_height);
}

VoxelFunction step_to_voxel(const StepFunction& fn, std::size_t n) {
  if (n < 1) throw std::invalid_argument("grid size must be at least 1");
  if (fn.is_zero()) return VoxelFunction(std::vector<int>(n, 0));
  const Rational grid_n(static_cast<unsigned long>(n));
  return step_to_voxel(fn, n, fn.support_end() / grid_n, fn.max_value() / grid_n);
}

VoxelFunction exact_voxelization(const StepFunction& fn, std::size_t max_n) {
  if (fn.is_zero()) return VoxelFunction(std::vector<int>{0});
  Rational width = fn.cuts()[1];
  for (std::size_t i = 2; i < fn.cuts().size(); ++i) width = rational_gcd(width, fn.cuts()[i]);
  Rational unit = 0;
  for (const auto& v : fn.values()) {
    if (v == 0) continue;
    unit = unit == 0 ? v : rational_gcd(unit, v);
  }
  const Rational columns = fn.support_end() / width;
  const Rational top = fn.max_value() / unit;
  const Rational n = columns > top ? columns : top;
  if (n > Rational(static_cast<unsigned long>(max_n))) {
    throw std::length_error("exact voxel grid needs n = " + to_string(n) + " > " +
                            std::to_string(max_n));
  }
  const std::size_t size = n.get_num().get_ui();
  std::vector<int> heights(size, 0);
  for (const auto& p : fn.support_pieces()) {
    std::size_t a = Rational(p.lo / width).get_num().get_ui();
    std::size_t b = Rational(p.hi / width).get_num().get_ui();
    int h = static_cast<int>(Rational(p.value / unit).get_num().get_si());
    for (std::size_t i = a; i < b; ++i) heights[i] = h;
  }
  return VoxelFunction(std::move(heights), width, unit);
}

StepFunction voxel_to_step(const VoxelFunction& voxels) {
  std::vector<Rational> values;
  values.reserve(voxels.n());
  for (int h : voxels.heights()) values.push_back(voxels.cell_height() * h);
  return StepFunction::from_cells(voxels.cell_width(), values);
}

std::vector<Column> pivot_set(const VoxelFunction& voxels) {
  // "Some t < xi with h_t > max(h_{t+1}, ..., h_xi)" holds exactly when h_xi
  // is below the running maximum of the columns left of xi.
  std::vector<Column> out;
  int prefix_max = 0;
  for (Column xi = 1; xi <= voxels.n(); ++xi) {
    const int h = voxels.height(xi);
    if (h < voxels.height(xi + 1) && h < prefix_max) out.push_back(xi);
    prefix_max = std::max(prefix_max, h);
  }
  return out;
}

namespace {

bool is_pivot(const VoxelFunction& voxels, Column xi) {
  if (xi < 1 || xi > voxels.n()) return false;
  const int h = voxels.height(xi);
  if (!(h < voxels.height(xi + 1))) return false;
  for (Column t = 1; t < xi; ++t) {
    if (voxels.height(t) > h) return true;
  }
  return false;
}

Column find_eta(const VoxelFunction& voxels, Column xi) {
  const int h = voxels.height(xi);
  Column e = xi + 1;
  while (!(voxels.height(e - 1) > h && h >= voxels.height(e))) ++e;
  return e;
}

void require_pivot(const VoxelFunction& voxels, Column xi) {
  if (!is_pivot(voxels, xi)) {
    throw std::invalid_argument("column " + std::to_string(xi) + " is not a pivot");
  }
}

std::vector<int> slide_left(const VoxelFunction& voxels, Column xi, Column e) {
  std::vector<int> heights = voxels.heights();
  const int floor = voxels.height(xi);
  for (Column i = xi; i < e; ++i) heights[i - 1] = std::max(floor, voxels.height(i + 1));
  return heights;
}

}  // namespace

Column eta(const VoxelFunction& voxels, Column pivot) {
  require_pivot(voxels, pivot);
  return find_eta(voxels, pivot);
}

VoxelFunction elementary_tamp(const VoxelFunction& voxels, Column pivot) {
  require_pivot(voxels, pivot);
  return VoxelFunction(slide_left(voxels, pivot, find_eta(voxels, pivot)), voxels.cell_width(),
                       voxels.cell_height());
}

VoxelTampResult tamp_voxel(const VoxelFunction& voxels, const TampOptions& options) {
  VoxelTampResult out{voxels, {}};
  std::mt19937_64 rng(options.seed);
  out.trace.invariant_n.push_back(voxels.moment());
  for (;;) {
    const auto pivots = pivot_set(out.voxels);
    if (pivots.empty()) break;
    Column xi = pivots.front();
    switch (options.policy) {
      case PivotPolicy::Leftmost: break;
      case PivotPolicy::Rightmost: xi = pivots.back(); break;
      case PivotPolicy::Random: {
        std::uniform_int_distribution<std::size_t> pick(0, pivots.size() - 1);
        xi = pivots[pick(rng)];
        break;
      }
    }
    const Column e = find_eta(out.voxels, xi);
    out.voxels = VoxelFunction(slide_left(out.voxels, xi, e), voxels.cell_width(), voxels.cell_height());
    out.trace.steps.push_back(
        {xi, e, options.record_heights ? out.voxels.heights() : std::vector<int>{}});
    out.trace.invariant_n.push_back(out.voxels.moment());
  }
  return out;
}

}  // namespace tamp1d
