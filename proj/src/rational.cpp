#include "tamp1d/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tamp1d {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
}

Rational power_of_ten(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) return Rational(p);
  return Rational(mpz_class(1), p);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) malformed(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    result = Rational(mpz_class(std::string(num), 10), d);
    result.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) malformed(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      int_part = s.substr(0, dot);
      frac_part = s.substr(dot + 1);
      if (!frac_part.empty() && !all_digits(frac_part)) malformed(text);
    }
    if (int_part.empty() && frac_part.empty()) malformed(text);
    if (!int_part.empty() && !all_digits(int_part)) malformed(text);
    std::string digits = std::string(int_part) + std::string(frac_part);
    result = Rational(mpz_class(digits, 10)) *
             power_of_ten(exponent - static_cast<long>(frac_part.size()));
    result.canonicalize();
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  // gcd(p1/q1, p2/q2) = gcd(p1 q2, p2 q1) / (q1 q2)
  mpz_class g;
  mpz_class x = a.get_num() * b.get_den();
  mpz_class y = b.get_num() * a.get_den();
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  Rational r(g, a.get_den() * b.get_den());
  r.canonicalize();
  return r;
}

Rational ceil(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return Rational(q);
}

std::string format_significant(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

}  // namespace tamp1d
