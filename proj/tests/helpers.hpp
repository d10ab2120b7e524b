#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

#include "fdanova/basis.hpp"
#include "fdanova/detail/rng.hpp"

namespace testutil {

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Naive Cox-de Boor recursion straight from the textbook definition;
/// deliberately independent of BasisSystem's iterative evaluation.
inline double naive_bspline(const std::vector<double>& knots, int i, int k,
                            double t) {
  if (k == 1) {
    const bool last =
        knots[i + 1] == knots.back() && t == knots[i + 1] && knots[i] < t;
    return (knots[i] <= t && t < knots[i + 1]) || last ? 1.0 : 0.0;
  }
  double left = 0.0, right = 0.0;
  const double dl = knots[i + k - 1] - knots[i];
  const double dr = knots[i + k] - knots[i + 1];
  if (dl > 0.0) left = (t - knots[i]) / dl * naive_bspline(knots, i, k - 1, t);
  if (dr > 0.0)
    right = (knots[i + k] - t) / dr * naive_bspline(knots, i + 1, k - 1, t);
  return left + right;
}

inline std::vector<double> clamped_knots(const fdanova::BasisSystem& basis) {
  std::vector<double> knots(4, basis.a());
  const auto ik = basis.interior_knots();
  knots.insert(knots.end(), ik.begin(), ik.end());
  knots.insert(knots.end(), 4, basis.b());
  return knots;
}

/// Random coefficient matrix with entries ~ N(0, 1) from a fixed stream.
inline Eigen::MatrixXd random_coefs(int n, int p, std::uint64_t seed) {
  fdanova::detail::RandomStream rng(seed);
  Eigen::MatrixXd A(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) A(i, j) = rng.normal();
  return A;
}

/// Composite Simpson quadrature of f over [a, b] with `intervals` panels
/// (must be even). Independent oracle for integral-form statistics.
inline double simpson_integral(const std::function<double(double)>& f,
                               double a, double b, int intervals) {
  const double h = (b - a) / intervals;
  double acc = f(a) + f(b);
  for (int i = 1; i < intervals; ++i)
    acc += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

}  // namespace testutil
