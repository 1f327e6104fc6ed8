#include "distspec/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace distspec {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational lambda2_threshold() { return make_rational(-2929, 5000); }

Rational pow10(int exponent) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? make_rational(1, p) : Rational(p);
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    const BigInt d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = make_rational(BigInt(std::string(num), 10), d);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad(text);
    }
    const BigInt digits(std::string(whole) + std::string(frac), 10);
    value = Rational(digits) * pow10(-static_cast<int>(frac.size()));
  } else {
    if (!all_digits(s)) bad(text);
    value = Rational(BigInt(std::string(s), 10));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational round_decimal(const Rational& q, int digits) {
  const Rational scale = pow10(digits);
  const Rational scaled = abs(q) * scale + Rational(1, 2);
  BigInt floored;
  mpz_fdiv_q(floored.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational out = Rational(floored) / scale;
  out.canonicalize();
  return sgn(q) < 0 ? Rational(-out) : out;
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 0) throw std::invalid_argument("digits must be nonnegative");
  const Rational rounded = round_decimal(q, digits);
  const Rational scaled = abs(rounded) * pow10(digits);
  std::string body = BigInt(scaled.get_num() / scaled.get_den()).get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (sgn(rounded) < 0 ? "-" : "") + body;
}

}  // namespace distspec
