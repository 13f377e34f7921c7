#pragma once

#include <ostream>
#include <vector>

#include "tamp1d/intervals.hpp"
#include "tamp1d/rational.hpp"

namespace tamp1d {

/// One constant piece [lo, hi) of a step function.
struct Piece {
  Rational lo;
  Rational hi;
  Rational value;

  friend bool operator==(const Piece&, const Piece&) = default;
};

/// Non-negative, compactly supported, piecewise-constant function on the
/// half-line. Stored canonically: cuts 0 = x_0 < x_1 < ... < x_m with value
/// v_i on [x_{i-1}, x_i), neighbouring values distinct, v_m != 0, and the
/// implicit value 0 on [x_m, +inf).
class StepFunction {
 public:
  StepFunction();

  /// Pieces may come in any order and leave gaps (read as zero). Throws
  /// std::invalid_argument on negative values, negative coordinates,
  /// reversed pieces or overlaps of positive length.
  static StepFunction from_pieces(std::vector<Piece> pieces);

  /// Consecutive cells of equal width starting at the origin.
  static StepFunction from_cells(const Rational& width, const std::vector<Rational>& values);

  static StepFunction indicator(const Rational& lo, const Rational& hi,
                                const Rational& value = Rational(1));

  const std::vector<Rational>& cuts() const { return cuts_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t piece_count() const { return values_.size(); }

  /// Every bounded piece, interior zero pieces included.
  std::vector<Piece> pieces() const;
  /// Pieces with a non-zero value.
  std::vector<Piece> support_pieces() const;

  const Rational& support_end() const { return cuts_.back(); }
  bool is_zero() const { return values_.empty(); }
  Rational max_value() const;
  /// Distinct positive values, ascending.
  std::vector<Rational> levels() const;

  /// Value of the piece [lo, hi) containing x; 0 past the support.
  Rational operator()(const Rational& x) const;

  StepFunction scaled(const Rational& factor) const;
  /// x -> phi(x / factor).
  StepFunction dilated(const Rational& factor) const;
  /// x -> phi(x - shift), zero on [0, shift).
  StepFunction translated(const Rational& shift) const;

  friend StepFunction operator+(const StepFunction& a, const StepFunction& b);
  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  StepFunction(std::vector<Rational> cuts, std::vector<Rational> values);

  std::vector<Rational> cuts_;
  std::vector<Rational> values_;
};

std::ostream& operator<<(std::ostream& os, const StepFunction& fn);

/// Non-decreasing step function with an unbounded last piece.
struct MonotoneStep {
  std::vector<Rational> cuts;    // cuts[0] = 0
  std::vector<Rational> values;  // value on [cuts[i], cuts[i+1])
  Rational terminal;             // value on [cuts.back(), +inf)

  Rational operator()(const Rational& x) const;

  friend bool operator==(const MonotoneStep&, const MonotoneStep&) = default;
};

/// A piece of the common refinement of two step functions.
struct PiecePair {
  Rational lo;
  Rational hi;
  Rational first;
  Rational second;
};

/// Common refinement of the cuts of both functions over [0, max support end].
std::vector<PiecePair> common_refinement(const StepFunction& a, const StepFunction& b);

/// {x : phi(x) >= level}. Requires level > 0.
IntervalSet superlevel(const StepFunction& fn, const Rational& level);

/// (sum_i v_i^p |I_i|)^(1/p). Requires p >= 1.
double lp_norm(const StepFunction& fn, double p);

/// ||phi||_p^p evaluated exactly for an integer exponent p >= 1.
Rational lp_norm_pow(const StepFunction& fn, unsigned p);

/// The same norm through p * int nu^(p-1) meas{phi >= nu} dnu, integrated
/// exactly level band by level band.
double lp_norm_layer_cake(const StepFunction& fn, double p);

/// ||phi - psi||_p^p, exact.
Rational lp_distance_pow(const StepFunction& a, const StepFunction& b, unsigned p);

double lp_distance(const StepFunction& a, const StepFunction& b, double p);

/// p * int nu^(p-1) meas({a >= nu} symdiff {b >= nu}) dnu, exact.
Rational layer_cake_symdiff(const StepFunction& a, const StepFunction& b, unsigned p);

/// Non-increasing rearrangement.
StepFunction schwarz(const StepFunction& fn);

/// Running essential supremum x -> supess(phi 1_[0,x]).
MonotoneStep best_upper_bound(const StepFunction& fn);

struct ArgmaxAnchors {
  Rational s;      // right end of the last maximal plateau
  Rational sigma;  // s minus the measure of {phi != phi_dagger} on [0, s]
};

/// Throws std::invalid_argument for the zero function.
ArgmaxAnchors s_sigma(const StepFunction& fn);

/// Exact integral of the product.
Rational inner_product(const StepFunction& a, const StepFunction& b);

/// Non-decreasing then non-increasing over [0, support_end]; equivalently every
/// superlevel set is a single segment.
bool is_unimodal(const StepFunction& fn);

/// Equal superlevel measures at every level of the merged level set.
bool is_rearrangement_of(const StepFunction& a, const StepFunction& b);

}  // namespace tamp1d
