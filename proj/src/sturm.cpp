#include "distspec/sturm.hpp"

#include <stdexcept>

namespace distspec {

namespace {

template <typename SignFn>
int count_variations(const std::vector<IntPolynomial>& chain, SignFn&& sign_of) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_of(p);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

// p divided by its (positive) content, optionally negated.
IntPolynomial scale_down(const IntPolynomial& p, bool negate) {
  const BigInt c = p.content();
  std::vector<BigInt> out(p.coefficients().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), p.coefficients()[i].get_mpz_t(), c.get_mpz_t());
    if (negate) out[i] = -out[i];
  }
  return IntPolynomial(std::move(out));
}

}  // namespace

SturmChain::SturmChain(const IntPolynomial& square_free) {
  if (square_free.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  chain_.push_back(square_free);
  if (square_free.degree() < 1) return;
  chain_.push_back(scale_down(square_free.derivative(), false));
  while (chain_.back().degree() > 0) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    IntPolynomial r = pseudo_remainder(a, b);
    // prem multiplies by lc(b)^k; undo a negative factor so the chain stays a
    // positive multiple of the true remainder sequence.
    const int k = a.degree() - b.degree() + 1;
    if (sgn(b.leading()) < 0 && k % 2 == 1) r = -r;
    if (r.is_zero()) break;
    chain_.push_back(scale_down(r, true));
  }
}

int SturmChain::variations_at(const Rational& x) const {
  return count_variations(chain_, [&](const IntPolynomial& p) { return p.sign_at(x); });
}

int SturmChain::variations_at_infinity(bool positive) const {
  return count_variations(chain_, [&](const IntPolynomial& p) { return p.sign_at_infinity(positive); });
}

int SturmChain::count_greater(const Rational& t) const {
  // V(t) equals the variation count just to the right of t even when t is a
  // root, because the base polynomial is square-free.
  return variations_at(t) - variations_at_infinity(true);
}

int SturmChain::count_in(const Rational& lo, const Rational& hi) const {
  if (hi < lo) return 0;
  const int half_open = variations_at(lo) - variations_at(hi);
  return half_open + (base().sign_at(lo) == 0 ? 1 : 0);
}

RootCounter::RootCounter(const IntPolynomial& p) : poly_(p), square_free_(IntPolynomial::constant(1)) {
  if (p.is_zero()) throw std::domain_error("root counting on the zero polynomial");
  for (auto& [factor, multiplicity] : square_free_decomposition(p)) {
    square_free_ = square_free_ * factor;
    factors_.push_back({SturmChain(factor), multiplicity});
  }
}

int RootCounter::count_greater(const Rational& t) const {
  int total = 0;
  for (const auto& f : factors_) total += f.multiplicity * f.chain.count_greater(t);
  return total;
}

int RootCounter::multiplicity_at(const Rational& t) const {
  for (const auto& f : factors_) {
    if (f.chain.base().sign_at(t) == 0) return f.multiplicity;
  }
  return 0;
}

int RootCounter::real_root_count() const {
  int total = 0;
  for (const auto& f : factors_) {
    total += f.multiplicity * (f.chain.variations_at_infinity(false) - f.chain.variations_at_infinity(true));
  }
  return total;
}

int RootCounter::distinct_in(const Rational& lo, const Rational& hi) const {
  int total = 0;
  for (const auto& f : factors_) total += f.chain.count_in(lo, hi);
  return total;
}

int sturm_count_greater(const IntPolynomial& p, const Rational& t) {
  return RootCounter(p).count_greater(t);
}

}  // namespace distspec
