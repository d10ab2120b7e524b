#pragma once

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <vector>

namespace fdanova::detail {

// 5-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of
// degree <= 9, so products of two cubic splines (degree 6) integrate exactly.
struct GaussLegendre5 {
  static constexpr std::array<double, 5> nodes = {
      -0.9061798459386639928, -0.5384693101056830910, 0.0,
      0.5384693101056830910, 0.9061798459386639928};
  static constexpr std::array<double, 5> weights = {
      0.2369268850561890875, 0.4786286704993664680, 0.5688888888888888889,
      0.4786286704993664680, 0.2369268850561890875};
};

inline Eigen::VectorXd uniform_grid(double a, double b, int n) {
  if (n < 2) throw std::invalid_argument("uniform_grid: need at least 2 points");
  Eigen::VectorXd g(n);
  const double h = (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) g[i] = a + h * i;
  g[n - 1] = b;
  return g;
}

/// Composite Simpson rule over uniformly spaced values; requires an odd
/// number of points.
inline double simpson(const Eigen::VectorXd& y, double h) {
  const Eigen::Index n = y.size();
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("simpson: need an odd number of points >= 3");
  double odd = 0.0, even = 0.0;
  for (Eigen::Index i = 1; i < n - 1; i += 2) odd += y[i];
  for (Eigen::Index i = 2; i < n - 1; i += 2) even += y[i];
  return h / 3.0 * (y[0] + 4.0 * odd + 2.0 * even + y[n - 1]);
}

inline double trapezoid(const Eigen::VectorXd& y, double h) {
  const Eigen::Index n = y.size();
  if (n < 2) throw std::invalid_argument("trapezoid: need at least 2 points");
  return h * (y.sum() - 0.5 * (y[0] + y[n - 1]));
}

/// Gram matrix of an arbitrary function system by per-interval Gauss-Legendre
/// quadrature. `eval(t)` must return the vector of the `dim` function values
/// at t; `breaks` are the integration breakpoints (piecewise-smooth cells).
template <typename Eval>
Eigen::MatrixXd gram_by_quadrature(const Eval& eval, int dim,
                                   const std::vector<double>& breaks) {
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
    const double lo = breaks[s], hi = breaks[s + 1];
    if (hi <= lo) continue;
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t k = 0; k < GaussLegendre5::nodes.size(); ++k) {
      const double t = mid + half * GaussLegendre5::nodes[k];
      const Eigen::VectorXd phi = eval(t);
      W.selfadjointView<Eigen::Lower>().rankUpdate(
          phi, half * GaussLegendre5::weights[k]);
    }
  }
  return W.selfadjointView<Eigen::Lower>();
}

}  // namespace fdanova::detail
