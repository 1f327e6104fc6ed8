#include <cstdint>
#include <mutex>
#include <stdexcept>

#include "distspec/spectra.hpp"

namespace distspec {

namespace {

using u64 = std::uint64_t;

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Descending primes below 2^31, so that products of residues fit in 64 bits.
u64 word_prime(std::size_t index) {
  static std::mutex mutex;
  static std::vector<u64> primes;
  std::lock_guard lock(mutex);
  u64 candidate = primes.empty() ? (u64{1} << 31) - 1 : primes.back() - 2;
  while (primes.size() <= index) {
    if (is_prime(candidate)) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[index];
}

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

// Characteristic polynomial modulo p of the n x n matrix m (row-major, entries
// already reduced), via similarity reduction to upper Hessenberg form.
std::vector<u64> char_poly_mod(int n, std::vector<u64> m, u64 p) {
  auto at = [&](int i, int j) -> u64& { return m[static_cast<std::size_t>(i) * n + j]; };
  for (int j = 0; j + 2 < n; ++j) {
    int pivot = -1;
    for (int i = j + 1; i < n; ++i) {
      if (at(i, j) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != j + 1) {
      for (int k = 0; k < n; ++k) std::swap(at(pivot, k), at(j + 1, k));
      for (int k = 0; k < n; ++k) std::swap(at(k, pivot), at(k, j + 1));
    }
    const u64 inv = inv_mod(at(j + 1, j), p);
    for (int i = j + 2; i < n; ++i) {
      if (at(i, j) == 0) continue;
      const u64 factor = at(i, j) * inv % p;
      for (int k = 0; k < n; ++k) at(i, k) = (at(i, k) + (p - factor) * at(j + 1, k)) % p;
      for (int k = 0; k < n; ++k) at(k, j + 1) = (at(k, j + 1) + factor * at(k, i)) % p;
    }
  }

  // polys[k] = characteristic polynomial of the leading k x k block.
  std::vector<std::vector<u64>> polys(static_cast<std::size_t>(n) + 1);
  polys[0] = {1};
  for (int k = 1; k <= n; ++k) {
    std::vector<u64> next(static_cast<std::size_t>(k) + 1, 0);
    const auto& prev = polys[k - 1];
    const u64 diag = at(k - 1, k - 1);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = (next[d + 1] + prev[d]) % p;
      next[d] = (next[d] + (p - diag) * prev[d]) % p;
    }
    u64 subdiag_product = 1;
    for (int i = 1; i < k; ++i) {
      subdiag_product = subdiag_product * at(k - i, k - i - 1) % p;
      if (subdiag_product == 0) break;
      const u64 coef = at(k - i - 1, k - 1) * subdiag_product % p;
      if (coef == 0) continue;
      const auto& earlier = polys[k - i - 1];
      for (std::size_t d = 0; d < earlier.size(); ++d) {
        next[d] = (next[d] + (p - coef) * earlier[d]) % p;
      }
    }
    polys[k] = std::move(next);
  }
  return polys[n];
}

}  // namespace

IntPolynomial char_poly_exact(int order, std::span<const long long> entries) {
  if (order < 1) throw std::invalid_argument("matrix order must be positive");
  const auto n = static_cast<std::size_t>(order);
  if (entries.size() != n * n) throw std::invalid_argument("matrix has wrong number of entries");

  // |coefficient of x^(n-k)| <= C(n,k) * R^k, where R bounds every row's
  // Euclidean norm (Hadamard on each k x k principal minor).
  BigInt max_sq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt sq = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt e(static_cast<long>(entries[i * n + j]));
      sq += e * e;
    }
    if (sq > max_sq) max_sq = sq;
  }
  BigInt row_norm;
  mpz_sqrt(row_norm.get_mpz_t(), max_sq.get_mpz_t());
  row_norm += 1;
  BigInt bound = 0;
  BigInt binom = 1;
  BigInt power = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      binom = binom * static_cast<unsigned long>(n - k + 1) / static_cast<unsigned long>(k);
      power *= row_norm;
    }
    const BigInt term = binom * power;
    if (term > bound) bound = term;
  }
  const BigInt needed = 2 * bound + 1;

  std::vector<BigInt> residue_sum(n + 1, 0);
  BigInt modulus = 1;
  for (std::size_t used = 0; modulus <= needed; ++used) {
    const u64 p = word_prime(used);
    std::vector<u64> reduced(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      const long long r = entries[i] % static_cast<long long>(p);
      reduced[i] = static_cast<u64>(r < 0 ? r + static_cast<long long>(p) : r);
    }
    const auto local = char_poly_mod(order, std::move(reduced), p);
    const u64 m_mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), p);
    const u64 m_inv = inv_mod(m_mod_p, p);
    for (std::size_t d = 0; d <= n; ++d) {
      const u64 current = mpz_fdiv_ui(residue_sum[d].get_mpz_t(), p);
      const u64 delta = (local[d] + p - current) % p * m_inv % p;
      residue_sum[d] += modulus * static_cast<unsigned long>(delta);
    }
    modulus *= static_cast<unsigned long>(p);
  }
  const BigInt half = modulus / 2;
  for (auto& c : residue_sum) {
    if (c > half) c -= modulus;
  }
  return IntPolynomial(std::move(residue_sum));
}

IntPolynomial char_poly_exact(const DistanceMatrix& d) {
  std::vector<long long> entries(d.entries().begin(), d.entries().end());
  return char_poly_exact(d.order(), entries);
}

}  // namespace distspec
