#include "tamp1d/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tamp1d {

StepFunction::StepFunction() : cuts_{Rational(0)} {}

StepFunction::StepFunction(std::vector<Rational> cuts, std::vector<Rational> values) {
  // Drop empty pieces, merge equal neighbours, trim the zero tail.
  cuts_.push_back(Rational(0));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (cuts[i + 1] == cuts[i]) continue;
    if (!values_.empty() && values_.back() == values[i]) {
      cuts_.back() = cuts[i + 1];
    } else {
      values_.push_back(values[i]);
      cuts_.push_back(cuts[i + 1]);
    }
  }
  while (!values_.empty() && values_.back() == 0) {
    values_.pop_back();
    cuts_.pop_back();
  }
}

StepFunction StepFunction::from_pieces(std::vector<Piece> pieces) {
  for (const auto& p : pieces) {
    if (p.lo < 0) throw std::invalid_argument("piece starts at negative coordinate " + to_string(p.lo));
    if (p.lo > p.hi) {
      throw std::invalid_argument("reversed piece [" + to_string(p.lo) + ", " + to_string(p.hi) + ")");
    }
    if (p.value < 0) throw std::invalid_argument("negative value " + to_string(p.value));
  }
  std::erase_if(pieces, [](const Piece& p) { return p.lo == p.hi; });
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });

  std::vector<Rational> cuts{Rational(0)};
  std::vector<Rational> values;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece& p = pieces[i];
    if (p.lo < cuts.back()) {
      throw std::invalid_argument("overlapping pieces at " + to_string(p.lo));
    }
    if (p.lo > cuts.back()) {
      values.push_back(Rational(0));
      cuts.push_back(p.lo);
    }
    values.push_back(p.value);
    cuts.push_back(p.hi);
  }
  return StepFunction(std::move(cuts), std::move(values));
}

StepFunction StepFunction::from_cells(const Rational& width, const std::vector<Rational>& values) {
  if (width <= 0) throw std::invalid_argument("cell width must be positive");
  std::vector<Rational> cuts;
  cuts.reserve(values.size() + 1);
  for (std::size_t i = 0; i <= values.size(); ++i) cuts.push_back(width * static_cast<unsigned long>(i));
  for (const auto& v : values) {
    if (v < 0) throw std::invalid_argument("negative value " + to_string(v));
  }
  return StepFunction(std::move(cuts), values);
}

StepFunction StepFunction::indicator(const Rational& lo, const Rational& hi, const Rational& value) {
  return from_pieces({Piece{lo, hi, value}});
}

std::vector<Piece> StepFunction::pieces() const {
  std::vector<Piece> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out.push_back({cuts_[i], cuts_[i + 1], values_[i]});
  return out;
}

std::vector<Piece> StepFunction::support_pieces() const {
  std::vector<Piece> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != 0) out.push_back({cuts_[i], cuts_[i + 1], values_[i]});
  }
  return out;
}

Rational StepFunction::max_value() const {
  Rational m = 0;
  for (const auto& v : values_) {
    if (v > m) m = v;
  }
  return m;
}

std::vector<Rational> StepFunction::levels() const {
  std::vector<Rational> out;
  for (const auto& v : values_) {
    if (v > 0) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational StepFunction::operator()(const Rational& x) const {
  if (x < 0 || x >= cuts_.back()) return 0;
  auto it = std::upper_bound(cuts_.begin(), cuts_.end(), x);
  return values_[static_cast<std::size_t>(it - cuts_.begin()) - 1];
}

StepFunction StepFunction::scaled(const Rational& factor) const {
  if (factor < 0) throw std::invalid_argument("negative scale factor");
  std::vector<Rational> values = values_;
  for (auto& v : values) v *= factor;
  return StepFunction(cuts_, std::move(values));
}

StepFunction StepFunction::dilated(const Rational& factor) const {
  if (factor <= 0) throw std::invalid_argument("dilation factor must be positive");
  std::vector<Rational> cuts = cuts_;
  for (auto& c : cuts) c *= factor;
  return StepFunction(std::move(cuts), values_);
}

StepFunction StepFunction::translated(const Rational& shift) const {
  if (shift < 0) throw std::invalid_argument("translation must stay on the half-line");
  std::vector<Rational> cuts{Rational(0), shift};
  std::vector<Rational> values{Rational(0)};
  for (std::size_t i = 0; i < values_.size(); ++i) {
    cuts.push_back(cuts_[i + 1] + shift);
    values.push_back(values_[i]);
  }
  return StepFunction(std::move(cuts), std::move(values));
}

StepFunction operator+(const StepFunction& a, const StepFunction& b) {
  std::vector<Rational> cuts{Rational(0)};
  std::vector<Rational> values;
  for (const auto& piece : common_refinement(a, b)) {
    cuts.push_back(piece.hi);
    values.push_back(piece.first + piece.second);
  }
  return StepFunction(std::move(cuts), std::move(values));
}

std::ostream& operator<<(std::ostream& os, const StepFunction& fn) {
  os << '{';
  bool first = true;
  for (const auto& p : fn.support_pieces()) {
    if (!first) os << ", ";
    first = false;
    os << to_string(p.value) << "@[" << to_string(p.lo) << ", " << to_string(p.hi) << ')';
  }
  return os << '}';
}

Rational MonotoneStep::operator()(const Rational& x) const {
  if (x >= cuts.back()) return terminal;
  auto it = std::upper_bound(cuts.begin(), cuts.end(), x);
  if (it == cuts.begin()) return values.empty() ? terminal : values.front();
  return values[static_cast<std::size_t>(it - cuts.begin()) - 1];
}

std::vector<PiecePair> common_refinement(const StepFunction& a, const StepFunction& b) {
  std::vector<Rational> cuts;
  cuts.reserve(a.cuts().size() + b.cuts().size());
  std::merge(a.cuts().begin(), a.cuts().end(), b.cuts().begin(), b.cuts().end(),
             std::back_inserter(cuts));
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<PiecePair> out;
  out.reserve(cuts.size());
  std::size_t ia = 0, ib = 0;
  const auto& ca = a.cuts();
  const auto& cb = b.cuts();
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Rational& lo = cuts[k];
    while (ia < a.piece_count() && ca[ia + 1] <= lo) ++ia;
    while (ib < b.piece_count() && cb[ib + 1] <= lo) ++ib;
    Rational va = ia < a.piece_count() ? a.values()[ia] : Rational(0);
    Rational vb = ib < b.piece_count() ? b.values()[ib] : Rational(0);
    out.push_back({lo, cuts[k + 1], std::move(va), std::move(vb)});
  }
  return out;
}

IntervalSet superlevel(const StepFunction& fn, const Rational& level) {
  if (level <= 0) throw std::invalid_argument("superlevel requires a positive level");
  std::vector<IntervalSet::Bounds> bounds;
  for (std::size_t i = 0; i < fn.piece_count(); ++i) {
    if (fn.values()[i] >= level) bounds.emplace_back(fn.cuts()[i], fn.cuts()[i + 1]);
  }
  return IntervalSet::from_bounds(std::move(bounds));
}

namespace {

void require_exponent(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("exponent p must be >= 1");
}

double pow_abs(const Rational& x, double p) { return std::pow(std::fabs(to_double(x)), p); }

}  // namespace

double lp_norm(const StepFunction& fn, double p) {
  require_exponent(p);
  long double total = 0;
  for (const auto& piece : fn.pieces()) {
    total += static_cast<long double>(pow_abs(piece.value, p)) * to_double(piece.hi - piece.lo);
  }
  return static_cast<double>(std::pow(total, 1.0L / p));
}

Rational lp_norm_pow(const StepFunction& fn, unsigned p) {
  if (p < 1) throw std::invalid_argument("exponent p must be >= 1");
  Rational total = 0;
  for (const auto& piece : fn.pieces()) total += pow(piece.value, p) * (piece.hi - piece.lo);
  return total;
}

double lp_norm_layer_cake(const StepFunction& fn, double p) {
  require_exponent(p);
  long double total = 0;
  double previous = 0;
  for (const auto& level : fn.levels()) {
    double current = std::pow(to_double(level), p);
    total += static_cast<long double>(current - previous) * to_double(measure(superlevel(fn, level)));
    previous = current;
  }
  return static_cast<double>(std::pow(total, 1.0L / p));
}

Rational lp_distance_pow(const StepFunction& a, const StepFunction& b, unsigned p) {
  if (p < 1) throw std::invalid_argument("exponent p must be >= 1");
  Rational total = 0;
  for (const auto& piece : common_refinement(a, b)) {
    Rational diff = piece.first - piece.second;
    total += pow(abs(diff), p) * (piece.hi - piece.lo);
  }
  return total;
}

double lp_distance(const StepFunction& a, const StepFunction& b, double p) {
  require_exponent(p);
  long double total = 0;
  for (const auto& piece : common_refinement(a, b)) {
    total += static_cast<long double>(pow_abs(piece.first - piece.second, p)) *
             to_double(piece.hi - piece.lo);
  }
  return static_cast<double>(std::pow(total, 1.0L / p));
}

Rational layer_cake_symdiff(const StepFunction& a, const StepFunction& b, unsigned p) {
  if (p < 1) throw std::invalid_argument("exponent p must be >= 1");
  std::vector<Rational> levels = a.levels();
  for (auto& l : b.levels()) levels.push_back(l);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // On each band (l_{k-1}, l_k] both superlevel sets are constant, and
  // p * int nu^(p-1) over the band is l_k^p - l_{k-1}^p.
  Rational total = 0;
  Rational previous = 0;
  for (const auto& level : levels) {
    Rational current = pow(level, p);
    total += (current - previous) * measure(symdiff(superlevel(a, level), superlevel(b, level)));
    previous = current;
  }
  return total;
}

StepFunction schwarz(const StepFunction& fn) {
  std::vector<Piece> pieces = fn.support_pieces();
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const Piece& a, const Piece& b) { return a.value > b.value; });
  std::vector<Piece> laid;
  Rational x = 0;
  for (const auto& p : pieces) {
    Rational end = x + (p.hi - p.lo);
    laid.push_back({x, end, p.value});
    x = end;
  }
  return StepFunction::from_pieces(std::move(laid));
}

MonotoneStep best_upper_bound(const StepFunction& fn) {
  MonotoneStep out;
  out.cuts.push_back(Rational(0));
  Rational running = 0;
  for (std::size_t i = 0; i < fn.piece_count(); ++i) {
    if (fn.values()[i] > running) running = fn.values()[i];
    if (!out.values.empty() && out.values.back() == running) {
      out.cuts.back() = fn.cuts()[i + 1];
    } else {
      out.values.push_back(running);
      out.cuts.push_back(fn.cuts()[i + 1]);
    }
  }
  out.terminal = running;
  // The trailing plateau at the running maximum is the unbounded piece.
  while (!out.values.empty() && out.values.back() == out.terminal) {
    out.values.pop_back();
    out.cuts.pop_back();
  }
  return out;
}

ArgmaxAnchors s_sigma(const StepFunction& fn) {
  if (fn.is_zero()) throw std::invalid_argument("s(phi) is undefined for the zero function");
  const Rational top = fn.max_value();
  std::size_t last = 0;
  for (std::size_t i = 0; i < fn.piece_count(); ++i) {
    if (fn.values()[i] == top) last = i;
  }
  ArgmaxAnchors out{fn.cuts()[last + 1], Rational(0)};
  Rational running = 0;
  Rational discrepancy = 0;
  for (std::size_t i = 0; i <= last; ++i) {
    if (fn.values()[i] > running) running = fn.values()[i];
    if (fn.values()[i] != running) discrepancy += fn.cuts()[i + 1] - fn.cuts()[i];
  }
  out.sigma = out.s - discrepancy;
  return out;
}

Rational inner_product(const StepFunction& a, const StepFunction& b) {
  Rational total = 0;
  for (const auto& piece : common_refinement(a, b)) {
    total += piece.first * piece.second * (piece.hi - piece.lo);
  }
  return total;
}

bool is_rearrangement_of(const StepFunction& a, const StepFunction& b) {
  std::vector<Rational> levels = a.levels();
  for (auto& l : b.levels()) levels.push_back(l);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (const auto& level : levels) {
    if (measure(superlevel(a, level)) != measure(superlevel(b, level))) return false;
  }
  return true;
}

bool is_unimodal(const StepFunction& fn) {
  const auto& v = fn.values();
  std::size_t i = 1;
  while (i < v.size() && v[i - 1] < v[i]) ++i;
  while (i < v.size() && v[i - 1] > v[i]) ++i;
  return i >= v.size();
}

}  // namespace tamp1d
