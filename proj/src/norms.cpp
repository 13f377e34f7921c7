#include "tamp1d/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace tamp1d {

PiecewiseLinear::PiecewiseLinear(Rational grid_step, std::vector<Rational> nodes)
    : grid_step_(std::move(grid_step)), nodes_(std::move(nodes)) {
  if (grid_step_ <= 0) throw std::invalid_argument("grid step must be positive");
  if (nodes_.size() < 2) throw std::invalid_argument("need at least two nodes");
  for (const auto& v : nodes_) {
    if (v < 0) throw std::invalid_argument("negative node value " + to_string(v));
  }
  if (nodes_.back() != 0) {
    throw std::invalid_argument("last node must vanish for the zero extension");
  }
}

Rational PiecewiseLinear::support_end() const {
  return grid_step_ * static_cast<unsigned long>(nodes_.size() - 1);
}

Rational PiecewiseLinear::operator()(const Rational& x) const {
  if (x < 0 || x >= support_end()) return 0;
  Rational t = x / grid_step_;
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
  const std::size_t i = k.get_ui();
  Rational frac = t - Rational(k);
  return nodes_[i] + (nodes_[i + 1] - nodes_[i]) * frac;
}

PiecewiseLinear linear_interpolate(const VoxelFunction& voxels) {
  std::vector<Rational> nodes;
  nodes.reserve(voxels.n() + 2);
  nodes.push_back(Rational(0));
  for (int h : voxels.heights()) nodes.push_back(voxels.cell_height() * h);
  nodes.push_back(Rational(0));
  return PiecewiseLinear(voxels.cell_width(), std::move(nodes));
}

namespace {

void require_exponent(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("exponent p must be >= 1");
}

}  // namespace

double w1p_halfnorm_pow(const PiecewiseLinear& fn, double p) {
  require_exponent(p);
  const auto& nodes = fn.nodes();
  long double total = 0;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    total += std::pow(std::fabs(to_double(nodes[k + 1] - nodes[k])), p);
  }
  return static_cast<double>(total / std::pow(static_cast<long double>(to_double(fn.grid_step())), p - 1));
}

double w1p_halfnorm(const PiecewiseLinear& fn, double p) {
  return std::pow(w1p_halfnorm_pow(fn, p), 1.0 / p);
}

namespace {

// Portion of segment k lying in the hollows, as [lo, hi) or nothing.
std::optional<IntervalSet::Bounds> hollow_part(const PiecewiseLinear& fn, std::size_t k,
                                               const Rational& left_sup,
                                               const Rational& right_sup) {
  const auto& nodes = fn.nodes();
  const Rational& a = nodes[k];
  const Rational& b = nodes[k + 1];
  const Rational& threshold = left_sup < right_sup ? left_sup : right_sup;
  const Rational x0 = fn.grid_step() * static_cast<unsigned long>(k);
  const Rational x1 = x0 + fn.grid_step();
  const bool a_below = a < threshold;
  const bool b_below = b < threshold;
  if (a_below && b_below) return IntervalSet::Bounds{x0, x1};
  if (!a_below && !b_below) return std::nullopt;
  Rational crossing = x0 + fn.grid_step() * (threshold - a) / (b - a);
  if (a_below) return IntervalSet::Bounds{x0, crossing};
  return IntervalSet::Bounds{crossing, x1};
}

template <typename Visit>
void for_each_hollow_part(const PiecewiseLinear& fn, Visit visit) {
  const auto& nodes = fn.nodes();
  const std::size_t segments = nodes.size() - 1;
  std::vector<Rational> suffix_max(nodes.size() + 1, Rational(0));
  for (std::size_t k = nodes.size(); k-- > 0;) {
    suffix_max[k] = nodes[k] > suffix_max[k + 1] ? nodes[k] : suffix_max[k + 1];
  }
  Rational prefix_max = 0;
  for (std::size_t k = 0; k < segments; ++k) {
    if (nodes[k] > prefix_max) prefix_max = nodes[k];
    if (auto part = hollow_part(fn, k, prefix_max, suffix_max[k + 1])) visit(k, *part);
  }
}

}  // namespace

IntervalSet hollows(const PiecewiseLinear& fn) {
  std::vector<IntervalSet::Bounds> parts;
  for_each_hollow_part(fn, [&](std::size_t, const IntervalSet::Bounds& b) { parts.push_back(b); });
  return IntervalSet::from_bounds(std::move(parts));
}

double hollows_gradient_integral(const PiecewiseLinear& fn, double p) {
  require_exponent(p);
  const auto& nodes = fn.nodes();
  const double step = to_double(fn.grid_step());
  long double total = 0;
  for_each_hollow_part(fn, [&](std::size_t k, const IntervalSet::Bounds& b) {
    const double slope = std::fabs(to_double(nodes[k + 1] - nodes[k])) / step;
    total += std::pow(static_cast<long double>(slope), p) * to_double(b.second - b.first);
  });
  return static_cast<double>(total);
}

namespace {

// int_0^len |a + (b - a) u / len|^p du
long double abs_linear_pow_integral(long double a, long double b, long double len, double p) {
  if (len == 0) return 0;
  if (a == b) return std::pow(std::fabs(a), p) * len;
  const auto antiderivative = [p](long double v) {
    return std::pow(std::fabs(v), p + 1) / (p + 1) * (v < 0 ? -1 : 1);
  };
  // d/dv of antiderivative is |v|^p, so the integral is len/(b-a) * [F(b) - F(a)].
  return len / (b - a) * (antiderivative(b) - antiderivative(a));
}

}  // namespace

double lp_distance(const PiecewiseLinear& f, const StepFunction& g, double p) {
  require_exponent(p);
  std::vector<Rational> cuts = g.cuts();
  for (std::size_t k = 0; k < f.nodes().size(); ++k) {
    cuts.push_back(f.grid_step() * static_cast<unsigned long>(k));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  long double total = 0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Rational& lo = cuts[k];
    const Rational& hi = cuts[k + 1];
    const Rational g_value = g(lo);
    // f is linear on [lo, hi]; evaluate its endpoint values from inside.
    const Rational mid = (lo + hi) / 2;
    const Rational f_mid = f(mid);
    const Rational f_lo = f(lo);
    const Rational f_hi = 2 * f_mid - f_lo;
    total += abs_linear_pow_integral(to_double(f_lo - g_value), to_double(f_hi - g_value),
                                     to_double(hi - lo), p);
  }
  return static_cast<double>(std::pow(total, 1.0L / p));
}

double elementary_residual(const VoxelFunction& voxels, Column pivot, double p) {
  const VoxelFunction after = elementary_tamp(voxels, pivot);
  return w1p_halfnorm_pow(linear_interpolate(voxels), p) -
         w1p_halfnorm_pow(linear_interpolate(after), p);
}

double elementary_residual_bound(const VoxelFunction& voxels, Column pivot, double p) {
  require_exponent(p);
  if (pivot_set(voxels).empty() ||
      !std::ranges::binary_search(pivot_set(voxels), pivot)) {
    throw std::invalid_argument("column " + std::to_string(pivot) + " is not a pivot");
  }
  const double before = voxels.height(pivot - 1);
  const double at = voxels.height(pivot);
  const double after = voxels.height(pivot + 1);
  const double raw = std::pow(std::fabs(at - before), p) + std::pow(std::fabs(after - at), p) -
                     std::pow(std::fabs(after - before), p);
  return raw * std::pow(to_double(voxels.cell_height()), p) /
         std::pow(to_double(voxels.cell_width()), p - 1);
}

namespace {

struct Span {
  std::optional<long double> lo;  // nullopt: -inf
  std::optional<long double> hi;  // nullopt: +inf
  long double value;
};

}  // namespace

double hs_halfnorm(const StepFunction& fn, double s) {
  if (!(s > 0.0 && s < 0.5)) throw std::invalid_argument("s must lie in (0, 1/2)");
  if (fn.is_zero()) return 0.0;

  std::vector<Span> spans;
  spans.push_back({std::nullopt, 0.0L, 0.0L});
  for (const auto& piece : fn.pieces()) {
    spans.push_back({to_double(piece.lo), to_double(piece.hi), to_double(piece.value)});
  }
  spans.push_back({to_double(fn.support_end()), std::nullopt, 0.0L});

  const long double alpha = 1.0L - 2.0L * s;
  const long double scale = 2.0L * s * alpha;
  // G'' (u) = u^(-1-2s); G(0) = 0.
  const auto G = [&](long double u) { return u <= 0 ? 0.0L : std::pow(u, alpha) / scale; };

  long double total = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    for (std::size_t j = i + 1; j < spans.size(); ++j) {
      const long double diff = spans[i].value - spans[j].value;
      if (diff == 0) continue;
      // int_{I_i} int_{I_j} (y - x)^(-1-2s) dy dx with I_i left of I_j:
      // G(r - p) - G(r - q) - G(t - p) + G(t - q); infinite ends drop pairs
      // of terms whose difference vanishes in the limit.
      const Span& left = spans[i];
      const Span& right = spans[j];
      const long double q = *left.hi;
      const long double r = *right.lo;
      long double kernel = -G(r - q);
      if (right.hi) kernel += G(*right.hi - q);
      if (left.lo) kernel += G(r - *left.lo);
      if (left.lo && right.hi) kernel -= G(*right.hi - *left.lo);
      total += diff * diff * kernel;
    }
  }
  return static_cast<double>(total);
}

}  // namespace tamp1d
