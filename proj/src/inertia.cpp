#include <list>

#include "distspec/spectra.hpp"

namespace distspec {

Inertia inertia_shifted(const DistanceMatrix& d, const Rational& t) {
  const int n = d.order();
  std::vector<Rational> a(static_cast<std::size_t>(n) * n);
  auto at = [&](int i, int j) -> Rational& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = d(i, j);
    at(i, i) -= t;
  }

  Inertia inertia;
  std::list<int> remaining;
  for (int i = 0; i < n; ++i) remaining.push_back(i);

  while (!remaining.empty()) {
    auto pivot = remaining.end();
    for (auto it = remaining.begin(); it != remaining.end(); ++it) {
      if (sgn(at(*it, *it)) != 0) {
        pivot = it;
        break;
      }
    }

    if (pivot != remaining.end()) {
      const int p = *pivot;
      remaining.erase(pivot);
      const Rational piv = at(p, p);
      (sgn(piv) > 0 ? inertia.positive : inertia.negative) += 1;
      for (int i : remaining) {
        if (sgn(at(i, p)) == 0) continue;
        const Rational factor = at(i, p) / piv;
        for (int j : remaining) at(i, j) -= factor * at(p, j);
      }
      continue;
    }

    // Every remaining diagonal entry is zero: use a 2x2 pivot [[0, b], [b, 0]],
    // which has one positive and one negative eigenvalue.
    int p = -1;
    int q = -1;
    for (int i : remaining) {
      for (int j : remaining) {
        if (i != j && sgn(at(i, j)) != 0) {
          p = i;
          q = j;
          break;
        }
      }
      if (p >= 0) break;
    }
    if (p < 0) {
      inertia.zero += static_cast<int>(remaining.size());
      break;
    }
    remaining.remove(p);
    remaining.remove(q);
    inertia.positive += 1;
    inertia.negative += 1;
    const Rational b = at(p, q);
    for (int i : remaining) {
      for (int j : remaining) {
        at(i, j) -= (at(i, p) * at(q, j) + at(i, q) * at(p, j)) / b;
      }
    }
  }
  return inertia;
}

}  // namespace distspec
