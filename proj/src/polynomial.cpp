#include "distspec/polynomial.hpp"

#include <stdexcept>

namespace distspec {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::linear_factor(const BigInt& root) {
  return IntPolynomial(std::vector<BigInt>{BigInt(-root), BigInt(1)});
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  acc.canonicalize();
  return acc;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  if (is_zero()) return 0;
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt acc = coeffs_.back();
  BigInt den_power = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    den_power *= den;
    acc = acc * num + coeffs_[static_cast<std::size_t>(i)] * den_power;
  }
  return sgn(acc);
}

int IntPolynomial::sign_at_infinity(bool positive) const {
  if (is_zero()) return 0;
  const int s = sgn(leading());
  return (positive || degree() % 2 == 0) ? s : -s;
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt c = content();
  if (sgn(leading()) < 0) c = -c;
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) { return IntPolynomial::constant(c) * p; }

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) {
      out += mag.get_str();
      if (i > 0) out += "*";
    }
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by the zero polynomial");
  const int db = b.degree();
  const int shift = a.degree() - db;
  if (shift < 0) return a;
  const IntPolynomial lc = IntPolynomial::constant(b.leading());
  IntPolynomial r = a;
  for (int k = shift; k >= 0; --k) {
    std::vector<BigInt> term(static_cast<std::size_t>(k) + 1);
    term[static_cast<std::size_t>(k)] = r.coeff(db + k);
    r = lc * r - IntPolynomial(std::move(term)) * b;
  }
  return r;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  const int db = b.degree();
  const int dq = a.degree() - db;
  if (dq < 0) throw std::domain_error("polynomial division is not exact");
  std::vector<BigInt> rem = a.coefficients();
  std::vector<BigInt> quot(static_cast<std::size_t>(dq) + 1);
  const BigInt& lc = b.leading();
  for (int k = dq; k >= 0; --k) {
    const BigInt& top = rem[static_cast<std::size_t>(k + db)];
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) {
      throw std::domain_error("polynomial division is not exact over the integers");
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coefficients()[j];
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  for (const auto& c : rem) {
    if (c != 0) throw std::domain_error("polynomial division leaves a remainder");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
  std::vector<std::pair<IntPolynomial, int>> factors;
  if (p.degree() < 1) return factors;
  const IntPolynomial f = p.primitive_part();
  const IntPolynomial df = f.derivative();
  const IntPolynomial a0 = gcd(f, df);
  IntPolynomial b = divide_exact(f, a0);
  IntPolynomial c = divide_exact(df, a0);
  IntPolynomial d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    IntPolynomial ai = gcd(b, d);
    b = divide_exact(b, ai);
    c = divide_exact(d, ai);
    d = c - b.derivative();
    if (ai.degree() > 0) factors.emplace_back(ai.primitive_part(), i);
  }
  return factors;
}

}  // namespace distspec
