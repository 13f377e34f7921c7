#include "tamp1d/verify.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "tamp1d/intervals.hpp"
#include "tamp1d/norms.hpp"
#include "tamp1d/random_instances.hpp"
#include "tamp1d/step_function.hpp"
#include "tamp1d/tamping.hpp"

namespace tamp1d {

namespace {

using Check = std::function<std::optional<std::string>(Rng&)>;

struct Property {
  const char* suite;
  const char* name;
  Check check;
};

std::string show(const StepFunction& fn) {
  std::ostringstream out;
  out << fn;
  return out.str();
}

std::string show(const VoxelFunction& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.heights().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v.heights()[i]);
  }
  return out + "]";
}

bool close(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::max({1.0, std::fabs(a), std::fabs(b)});
}

IntervalSet random_set(Rng& rng) {
  std::uniform_int_distribution<int> count(0, 5);
  std::vector<IntervalSet::Bounds> bounds;
  for (int i = count(rng); i > 0; --i) {
    Rational lo = random_rational(rng, 0, 40, 4);
    bounds.emplace_back(lo, lo + random_rational(rng, 0, 12, 4));
  }
  return IntervalSet::from_bounds(std::move(bounds));
}

std::vector<Rational> merged_cuts(const StepFunction& a, const StepFunction& b) {
  std::vector<Rational> cuts = a.cuts();
  cuts.insert(cuts.end(), b.cuts().begin(), b.cuts().end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

// meas(superlevel(lower, nu) ∩ [0,x]) <= meas(superlevel(upper, nu) ∩ [0,x])
std::optional<std::string> left_mass_dominated(const StepFunction& lower, const StepFunction& upper) {
  const auto cuts = merged_cuts(lower, upper);
  for (const auto& level : lower.levels()) {
    const IntervalSet a = superlevel(lower, level);
    const IntervalSet b = superlevel(upper, level);
    for (const auto& x : cuts) {
      if (measure_within(a, 0, x) > measure_within(b, 0, x)) {
        return "left mass exceeded at level " + to_string(level) + ", x = " + to_string(x) +
               " for " + show(lower);
      }
    }
  }
  return std::nullopt;
}

std::vector<Property> properties() {
  std::vector<Property> all;

  all.push_back({"intervals", "boolean-ops-pointwise", [](Rng& rng) -> std::optional<std::string> {
    const IntervalSet s = random_set(rng), t = random_set(rng);
    const IntervalSet u = boolean_combine(s, t, SetOp::Union);
    const IntervalSet i = boolean_combine(s, t, SetOp::Intersection);
    const IntervalSet d = boolean_combine(s, t, SetOp::Difference);
    for (const auto* set : {&u, &i, &d}) {
      if (!set->invariant()) return "non-canonical result";
    }
    std::vector<Rational> cuts;
    for (const auto* set : {&s, &t}) {
      for (const auto& p : set->parts()) {
        cuts.push_back(p.lo);
        cuts.push_back(p.hi);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      if (cuts[k] == cuts[k + 1]) continue;
      const Rational mid = (cuts[k] + cuts[k + 1]) / 2;
      const bool in_s = s.contains(mid), in_t = t.contains(mid);
      if (u.contains(mid) != (in_s || in_t) || i.contains(mid) != (in_s && in_t) ||
          d.contains(mid) != (in_s && !in_t)) {
        return "membership mismatch at " + to_string(mid);
      }
    }
    return std::nullopt;
  }});

  all.push_back({"intervals", "measure-inclusion-exclusion", [](Rng& rng) -> std::optional<std::string> {
    const IntervalSet s = random_set(rng), t = random_set(rng);
    const Rational lhs = measure(boolean_combine(s, t, SetOp::Union)) +
                         measure(boolean_combine(s, t, SetOp::Intersection));
    if (lhs != measure(s) + measure(t)) return "inclusion-exclusion fails";
    if (measure(symdiff(s, t)) != 2 * measure(boolean_combine(s, t, SetOp::Union)) - measure(s) - measure(t)) {
      return "symmetric difference measure mismatch";
    }
    return std::nullopt;
  }});

  all.push_back({"intervals", "hull-splits-into-set-and-hollows", [](Rng& rng) -> std::optional<std::string> {
    const IntervalSet s = random_set(rng);
    const IntervalSet gaps = hollows_of_set(s);
    if (!boolean_combine(s, gaps, SetOp::Intersection).empty()) return "hollows meet the set";
    if (boolean_combine(s, gaps, SetOp::Union) != essential_hull(s)) return "set + hollows != hull";
    return std::nullopt;
  }});

  all.push_back({"stepfn", "schwarz-rearrangement", [](Rng& rng) -> std::optional<std::string> {
    const StepFunction fn = random_step_function(rng);
    const StepFunction star = schwarz(fn);
    if (!is_rearrangement_of(fn, star)) return "not a rearrangement: " + show(fn);
    for (unsigned p = 1; p <= 3; ++p) {
      if (lp_norm_pow(fn, p) != lp_norm_pow(star, p)) return "L^p norm changed: " + show(fn);
    }
    const auto& v = star.values();
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i] > v[i - 1]) return "schwarz output increases: " + show(fn);
    }
    return std::nullopt;
  }});

  all.push_back({"stepfn", "schwarz-inequality", [](Rng& rng) -> std::optional<std::string> {
    const StepFunction fn = random_step_function(rng);
    return left_mass_dominated(fn, schwarz(fn));
  }});

  all.push_back({"stepfn", "layer-cake-norm", [](Rng& rng) -> std::optional<std::string> {
    const StepFunction fn = random_step_function(rng);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      if (!close(lp_norm(fn, p), lp_norm_layer_cake(fn, p), 1e-12)) {
        return "layer cake differs at p = " + format_significant(p) + ": " + show(fn);
      }
    }
    return std::nullopt;
  }});

  all.push_back({"stepfn", "upper-bound", [](Rng& rng) -> std::optional<std::string> {
    const StepFunction fn = random_step_function(rng);
    const MonotoneStep bound = best_upper_bound(fn);
    for (std::size_t i = 1; i < bound.values.size(); ++i) {
      if (bound.values[i] < bound.values[i - 1]) return "upper bound decreases: " + show(fn);
    }
    for (const auto& piece : fn.pieces()) {
      const Rational mid = (piece.lo + piece.hi) / 2;
      if (bound(mid) < piece.value) return "upper bound below phi: " + show(fn);
    }
    return std::nullopt;
  }});

  all.push_back({"stepfn", "lp-symdiff-inequality", [](Rng& rng) -> std::optional<std::string> {
    const StepFunction a = random_step_function(rng), b = random_step_function(rng);
    for (unsigned p = 1; p <= 3; ++p) {
      const Rational lhs = lp_distance_pow(a, b, p);
      const Rational rhs = layer_cake_symdiff(a, b, p);
      if (lhs > rhs || (p == 1 && lhs != rhs)) {
        return "p = " + std::to_string(p) + ": " + to_string(lhs) + " vs " + to_string(rhs);
      }
    }
    return std::nullopt;
  }});

  all.push_back({"tamping", "three-routes", [](Rng& rng) -> std::optional<std::string> {
    const VoxelFunction v = random_voxels(rng, 1, 12);
    const StepFunction fn = voxel_to_step(v);
    const StepFunction level = tamp(fn);
    const StepFunction voxel = voxel_to_step(tamp_voxel(v).voxels);
    if (level != voxel) return "voxel route differs on " + show(v);
    if (!fn.is_zero() && tamp_double_schwarz(fn) != level) return "double Schwarz differs on " + show(v);
    return std::nullopt;
  }});

  all.push_back({"tamping", "rearrangement-unimodal-idempotent", [](Rng& rng) -> std::optional<std::string> {
    const StepFunction fn = random_step_function(rng);
    const StepFunction out = tamp(fn);
    if (!is_rearrangement_of(fn, out)) return "not a rearrangement: " + show(fn);
    if (!is_unimodal(out)) return "not unimodal: " + show(fn);
    if (tamp(out) != out) return "not idempotent: " + show(fn);
    if (!fn.is_zero() && tamp_double_schwarz(fn) != out) return "double Schwarz differs: " + show(fn);
    return std::nullopt;
  }});

  all.push_back({"tamping", "schwarz-inequality", [](Rng& rng) -> std::optional<std::string> {
    const StepFunction fn = random_step_function(rng);
    return left_mass_dominated(fn, tamp(fn));
  }});

  all.push_back({"tamping", "pivot-independence", [](Rng& rng) -> std::optional<std::string> {
    const VoxelFunction v = random_voxels(rng, 1, 16);
    const auto leftmost = tamp_voxel(v, {PivotPolicy::Leftmost, 0, false}).voxels;
    const auto rightmost = tamp_voxel(v, {PivotPolicy::Rightmost, 0, false}).voxels;
    const auto random = tamp_voxel(v, {PivotPolicy::Random, rng(), false}).voxels;
    if (leftmost.heights() != rightmost.heights() || leftmost.heights() != random.heights()) {
      return "pivot order matters on " + show(v);
    }
    return std::nullopt;
  }});

  all.push_back({"tamping", "termination", [](Rng& rng) -> std::optional<std::string> {
    const VoxelFunction v = random_voxels(rng, 1, 16);
    const TampingTrace trace = tamp_voxel(v, {PivotPolicy::Leftmost, 0, false}).trace;
    const auto& n = trace.invariant_n;
    for (std::size_t i = 1; i < n.size(); ++i) {
      if (n[i] >= n[i - 1]) return "N did not decrease on " + show(v);
    }
    if (trace.steps.size() > static_cast<std::size_t>(n.front())) return "too many steps on " + show(v);
    return std::nullopt;
  }});

  all.push_back({"norms", "refined-polya-szego", [](Rng& rng) -> std::optional<std::string> {
    const VoxelFunction v = random_voxels(rng, 1, 24);
    const PiecewiseLinear before = linear_interpolate(v);
    const PiecewiseLinear after = linear_interpolate(tamp_voxel(v, {PivotPolicy::Leftmost, 0, false}).voxels);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const double b = w1p_halfnorm_pow(before, p), a = w1p_halfnorm_pow(after, p);
      const double hollow = hollows_gradient_integral(before, p);
      if (hollow > (b - a) + 1e-9 * std::max(1.0, b)) {
        return "p = " + format_significant(p) + " on " + show(v);
      }
    }
    return std::nullopt;
  }});

  all.push_back({"norms", "residual-bound", [](Rng& rng) -> std::optional<std::string> {
    const VoxelFunction v = random_voxels(rng, 2, 16);
    for (Column xi : pivot_set(v)) {
      for (double p : {1.0, 2.0, 3.0}) {
        const double residual = elementary_residual(v, xi, p);
        const double bound = elementary_residual_bound(v, xi, p);
        if (residual < bound - 1e-9 * std::max(1.0, std::fabs(bound))) {
          return "pivot " + std::to_string(xi) + " on " + show(v);
        }
      }
    }
    return std::nullopt;
  }});

  all.push_back({"norms", "hs-translation-dilation", [](Rng& rng) -> std::optional<std::string> {
    const StepFunction fn = random_step_function(rng);
    const Rational shift = random_rational(rng, 1, 8, 4);
    const Rational factor = random_rational(rng, 1, 12, 4);
    for (double s : {0.1, 0.25, 0.4}) {
      const double base = hs_halfnorm(fn, s);
      if (!close(hs_halfnorm(fn.translated(shift), s), base, 1e-9)) return "translation: " + show(fn);
      const double scaled = std::pow(to_double(factor), 1 - 2 * s) * base;
      if (!close(hs_halfnorm(fn.dilated(factor), s), scaled, 1e-9)) return "dilation: " + show(fn);
    }
    return std::nullopt;
  }});

  return all;
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.failures == 0; });
}

std::string VerifyReport::format() const {
  std::ostringstream out;
  std::size_t failed = 0;
  out << "seed " << seed << "\n";
  for (const auto& r : results) {
    out << r.suite << "/" << r.name << ": " << (r.cases - r.failures) << "/" << r.cases << " ok";
    if (r.failures) {
      ++failed;
      out << "; first failure: " << r.first_failure;
    }
    out << "\n";
  }
  out << (failed ? "FAIL" : "PASS") << " (" << results.size() - failed << "/" << results.size()
      << " properties)\n";
  return out.str();
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"intervals", "stepfn", "tamping", "norms", "all"};
  return names;
}

VerifyReport run_verify(std::string_view suite, std::size_t cases, std::uint64_t seed) {
  if (std::find(verify_suites().begin(), verify_suites().end(), suite) == verify_suites().end()) {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  VerifyReport report;
  report.seed = seed;
  const auto all = properties();
  for (std::size_t index = 0; index < all.size(); ++index) {
    const Property& property = all[index];
    if (suite != "all" && suite != property.suite) continue;
    PropertyResult result{property.suite, property.name, cases, 0, {}};
    for (std::size_t k = 0; k < cases; ++k) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(k)};
      Rng rng(seq);
      std::optional<std::string> failure;
      try {
        failure = property.check(rng);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure) {
        if (result.failures++ == 0) result.first_failure = "case " + std::to_string(k) + ": " + *failure;
      }
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

}  // namespace tamp1d
