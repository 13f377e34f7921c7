#include "tamp1d/counterexamples.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tamp1d/norms.hpp"
#include "tamp1d/tamping.hpp"

namespace tamp1d {

namespace {

Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }

// meas([0, e] ∩ [y - t, y + t])
Rational window_overlap(const Rational& e, const Rational& t, const Rational& y) {
  Rational overlap = rmin(e, y + t) - rmax(Rational(0), y - t);
  return overlap > 0 ? overlap : Rational(0);
}

}  // namespace

Rational riesz_triple_integral(const Rational& e, const IntervalSet& middle, const Rational& t) {
  if (e <= 0) throw std::invalid_argument("e must be positive");
  if (t <= 0) throw std::invalid_argument("t must be positive");
  const std::vector<Rational> kinks{-t, t, e - t, e + t};
  Rational total = 0;
  for (const auto& part : middle.parts()) {
    std::vector<Rational> nodes{part.lo, part.hi};
    for (const auto& k : kinks) {
      if (k > part.lo && k < part.hi) nodes.push_back(k);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      total += (nodes[i + 1] - nodes[i]) *
               (window_overlap(e, t, nodes[i]) + window_overlap(e, t, nodes[i + 1])) / 2;
    }
  }
  return total;
}

RieszComparison riesz_comparison(const Rational& a, const Rational& b, const Rational& c,
                                 const Rational& d, const Rational& e, const Rational& t) {
  if (!(0 <= a && a < b && b <= c && c < d)) {
    throw std::invalid_argument("need 0 <= a < b <= c < d");
  }
  const IntervalSet plain{{a, b}, {c, d}};
  const IntervalSet tamped{{a, a + (b - a) + (d - c)}};
  return {riesz_triple_integral(e, plain, t), riesz_triple_integral(e, tamped, t)};
}

StepFunction hs_counterexample_function(const Rational& a, const Rational& b, const Rational& c,
                                        const Rational& d, const Rational& e) {
  if (!(0 < a && a < b && b <= c && c < d && d < e)) {
    throw std::invalid_argument("need 0 < a < b <= c < d < e");
  }
  return StepFunction::indicator(a, b) + StepFunction::indicator(c, d) +
         StepFunction::indicator(Rational(0), e);
}

namespace {

void require_hs_tuple(double s, const Rational& a, const Rational& b, const Rational& c,
                      const Rational& d, const Rational& e) {
  if (!(s > 0.0 && s < 0.5)) throw std::invalid_argument("s must lie in (0, 1/2)");
  if (!(0 < a && a < b && b <= c && c < d && d < e)) {
    throw std::invalid_argument("need 0 < a < b <= c < d < e");
  }
}

}  // namespace

HsComparison hs_counterexample_pair(double s, const Rational& a, const Rational& b,
                                    const Rational& c, const Rational& d, const Rational& e) {
  require_hs_tuple(s, a, b, c, d, e);
  const long double alpha = 1.0L - 2.0L * s;
  const auto P = [alpha](const Rational& u) {
    return u == 0 ? 0.0L : std::pow(static_cast<long double>(to_double(u)), alpha);
  };
  const long double prefactor = 1.0L / (2.0L * s * (0.5L - s));
  const long double before = P(b) - P(a) + P(d) - P(c) + P(e) + P(b - a) - P(c - a) + P(c - b) +
                             P(d - a) - P(d - b) + P(d - c) + P(e - a) - P(e - b) + P(e - c) -
                             P(e - d);
  const long double after =
      P(b + d - c) - P(a) + P(e) + P(b + d - c - a) + P(e - a) - P(e + c - d - b);
  return {static_cast<double>(prefactor * before), static_cast<double>(prefactor * after)};
}

const std::vector<HsInstance>& hs_failure_instances() {
  static const std::vector<HsInstance> instances{
      {0.25, 1, 2, 17, 32, 52},
      {0.2, 1, 2, 17, 32, 52},
      {0.3, 1, 2, 514, 1026, 2050},
      {0.35, 1, 2, 514, 1026, 2050},
      {0.4, 1, 2, 514, 1026, 2050},
      {0.45, 1, 2, 16386, 49154, 81922},
  };
  return instances;
}

HardyLittlewoodGap hardy_littlewood_gap(const StepFunction& phi, const StepFunction& psi) {
  return {inner_product(phi, psi), inner_product(tamp(phi), tamp(psi))};
}

}  // namespace tamp1d
