#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "distspec/spectra.hpp"

namespace distspec {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelativeTolerance = 1e-12;

}  // namespace

std::vector<double> jacobi_eigenvalues(int order, std::vector<double> a) {
  const auto n = static_cast<std::size_t>(order);
  if (order < 1 || a.size() != n * n) throw std::invalid_argument("jacobi: bad matrix shape");
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  double max_norm = 0.0;
  for (double v : a) max_norm = std::max(max_norm, std::abs(v));
  const double tolerance = kRelativeTolerance * max_norm;

  auto off_norm = [&] {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) sum += at(i, j) * at(i, j);
    return std::sqrt(sum);
  };

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_norm() <= tolerance) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }
  if (!converged && off_norm() > tolerance) {
    throw std::runtime_error("jacobi: no convergence within the sweep limit");
  }

  std::vector<double> eigenvalues(n);
  for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = at(i, i);
  std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
  return eigenvalues;
}

std::vector<double> float_spectrum(const DistanceMatrix& d) {
  std::vector<double> m(d.entries().begin(), d.entries().end());
  return jacobi_eigenvalues(d.order(), std::move(m));
}

}  // namespace distspec
