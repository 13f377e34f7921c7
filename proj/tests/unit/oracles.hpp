#pragma once

// Test-side reference implementations. They work on a uniform cell grid or by
// numerical quadrature and share no code path with the library routes they check.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "tamp1d/step_function.hpp"

namespace oracle {

using tamp1d::Rational;
using tamp1d::StepFunction;

// Values on the cells [k/den, (k+1)/den) covering [0, support_end).
inline std::vector<Rational> cells(const StepFunction& fn, long den) {
  std::vector<Rational> out;
  const Rational end = fn.support_end();
  for (long k = 0; Rational(k, den) < end; ++k) out.push_back(fn(Rational(2 * k + 1, 2 * den)));
  return out;
}

// A cell is a hollow iff its value is strictly below the maximum on both sides.
inline std::vector<bool> hollow_cells(const std::vector<Rational>& v) {
  std::vector<bool> out(v.size(), false);
  Rational left = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational right = 0;
    for (std::size_t j = i + 1; j < v.size(); ++j) right = std::max(right, v[j]);
    out[i] = v[i] < left && v[i] < right;
    left = std::max(left, v[i]);
  }
  return out;
}

// Tamping on cells: every hollow cell is removed from under each level above
// it, i.e. per level the superlevel cells are packed to the right of
// (first cell - hollow cells before it).
inline std::vector<Rational> tamp_cells(const std::vector<Rational>& v) {
  const auto holes = hollow_cells(v);
  std::vector<Rational> levels;
  for (const auto& x : v) {
    if (x > 0) levels.push_back(x);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<Rational> out(v.size(), Rational(0));
  for (const auto& level : levels) {
    std::size_t first = v.size(), count = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] >= level) {
        first = std::min(first, i);
        ++count;
      }
    }
    std::size_t removed = 0;
    for (std::size_t i = 0; i < first; ++i) removed += holes[i];
    for (std::size_t i = first - removed; i < first - removed + count; ++i) out[i] = level;
  }
  return out;
}

// |phi|^2_{H^s} over x < y by quadrature. For pieces I = [p,q] left of
// J = [r,t] the pair contributes (v_I - v_J)^2 int_0^inf w(u) u^(-1-2s) du with
// w(u) = |(I + u) ∩ J| = max(0, min(q-p, t-r, u+q-r, t-p-u)). The exterior
// zero pieces have p = -inf or t = +inf. Each term is integrated numerically
// between the kinks of w; past the last kink w is constant.
inline double hs_quadrature(const StepFunction& fn, double s) {
  if (fn.is_zero()) return 0.0;
  constexpr double inf = std::numeric_limits<double>::infinity();
  struct Span {
    double lo, hi, v;
  };
  std::vector<Span> spans{{-inf, 0.0, 0.0}};
  for (const auto& p : fn.pieces()) {
    spans.push_back({tamp1d::to_double(p.lo), tamp1d::to_double(p.hi), tamp1d::to_double(p.value)});
  }
  spans.push_back({tamp1d::to_double(fn.support_end()), inf, 0.0});

  boost::math::quadrature::tanh_sinh<double> finite;
  double total = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    for (std::size_t j = i + 1; j < spans.size(); ++j) {
      const double diff = spans[i].v - spans[j].v;
      if (diff == 0) continue;
      const double p = spans[i].lo, q = spans[i].hi, r = spans[j].lo, t = spans[j].hi;
      const double len_i = q - p, len_j = t - r;  // may be inf
      const double gap = r - q;                   // >= 0, exact for dyadic data
      const auto w = [&](double u) {
        double m = std::min(len_i, len_j);
        m = std::min(m, u - gap);
        if (std::isfinite(p) && std::isfinite(t)) m = std::min(m, (t - p) - u);
        return std::max(0.0, m);
      };
      const auto integrand = [&](double u) {
        const double wu = w(u);
        return wu == 0 ? 0.0 : (wu / u) * std::pow(u, -2 * s);
      };
      std::vector<double> kinks{gap};
      for (double k : {gap + std::min(len_i, len_j), gap + std::max(len_i, len_j), t - p}) {
        if (std::isfinite(k)) kinks.push_back(k);
      }
      std::sort(kinks.begin(), kinks.end());
      double part = 0;
      for (std::size_t k = 0; k + 1 < kinks.size(); ++k) {
        if (kinks[k + 1] > kinks[k]) part += finite.integrate(integrand, kinks[k], kinks[k + 1]);
      }
      if (!std::isfinite(p) || !std::isfinite(t)) {
        const double last = kinks.back();
        part += w(last + 1) * std::pow(last, -2 * s) / (2 * s);
      }
      total += diff * diff * part;
    }
  }
  return total;
}

}  // namespace oracle
