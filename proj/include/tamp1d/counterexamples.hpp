#pragma once

#include <vector>

#include "tamp1d/intervals.hpp"
#include "tamp1d/step_function.hpp"

namespace tamp1d {

/// int_{middle} int_{[0,e]} 1{|x - y| <= t} dx dy, with the outer functions
/// both equal to 1_[0,e]. Exact.
Rational riesz_triple_integral(const Rational& e, const IntervalSet& middle, const Rational& t);

/// Riesz values for the instance (a, b, c, d, e, t): the middle function is
/// 1_[a,b] + 1_[c,d] and its tamped version is 1_[a, a + (b - a) + (d - c)].
struct RieszComparison {
  Rational plain;
  Rational tamped;
};
RieszComparison riesz_comparison(const Rational& a, const Rational& b, const Rational& c,
                                 const Rational& d, const Rational& e, const Rational& t);

/// psi = 1_[a,b] + 1_[c,d] + 1_[0,e], for 0 < a < b <= c < d < e.
StepFunction hs_counterexample_function(const Rational& a, const Rational& b, const Rational& c,
                                        const Rational& d, const Rational& e);

struct HsComparison {
  double before;  // half-norm of psi
  double after;   // half-norm of tamp(psi)
};
/// Closed-form H^s half-norms of psi and of tamp(psi) = 1_[0,e] + 1_[a, b+d-c],
/// with the same normalization as hs_halfnorm (integral over x < y).
HsComparison hs_counterexample_pair(double s, const Rational& a, const Rational& b,
                                    const Rational& c, const Rational& d, const Rational& e);

struct HsInstance {
  double s;
  Rational a, b, c, d, e;
};
/// One tuple per order s in {0.25, 0.2, 0.3, 0.35, 0.4, 0.45} for which the
/// half-norm increases under tamping. (1,2,17,32,52) only works up to s = 0.25.
const std::vector<HsInstance>& hs_failure_instances();

struct HardyLittlewoodGap {
  Rational plain;   // int phi psi
  Rational tamped;  // int tamp(phi) tamp(psi)
};
HardyLittlewoodGap hardy_littlewood_gap(const StepFunction& phi, const StepFunction& psi);

}  // namespace tamp1d
