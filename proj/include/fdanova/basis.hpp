#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fdanova/detail/quadrature.hpp"
#include "fdanova/error.hpp"

namespace fdanova {

/// Clamped cubic B-spline basis {phi_1..phi_p} on [a, b] with p - 4 equally
/// spaced interior knots. The functions are nonnegative and form a partition
/// of unity, so constants are exactly representable.
class BasisSystem {
public:
  static constexpr int kOrder = 4;  // cubic

  BasisSystem(double a, double b, int dim) : a_(a), b_(b), p_(dim) {
    if (!(b > a)) throw std::invalid_argument("BasisSystem: need b > a");
    if (dim < kOrder)
      throw std::invalid_argument("BasisSystem: cubic basis needs dim >= 4");
    // Full clamped knot vector: a x4, p-4 interior knots, b x4.
    knots_.assign(kOrder, a);
    const int n_interior = dim - kOrder;
    for (int i = 1; i <= n_interior; ++i)
      knots_.push_back(a + (b - a) * i / (n_interior + 1));
    knots_.insert(knots_.end(), kOrder, b);
  }

  double a() const { return a_; }
  double b() const { return b_; }
  int dim() const { return p_; }

  std::vector<double> interior_knots() const {
    return {knots_.begin() + kOrder, knots_.end() - kOrder};
  }

  /// Integration breakpoints: a, interior knots, b.
  std::vector<double> breakpoints() const {
    std::vector<double> br{a_};
    const auto ik = interior_knots();
    br.insert(br.end(), ik.begin(), ik.end());
    br.push_back(b_);
    return br;
  }

  bool operator==(const BasisSystem& o) const {
    return a_ == o.a_ && b_ == o.b_ && p_ == o.p_ && knots_ == o.knots_;
  }
  bool operator!=(const BasisSystem& o) const { return !(*this == o); }

  /// Values of all p basis functions at t (at most 4 are nonzero).
  Eigen::VectorXd evaluate(double t) const {
    Eigen::VectorXd phi = Eigen::VectorXd::Zero(p_);
    double vals[kOrder];
    const int first = nonzero_values(t, vals);
    for (int k = 0; k < kOrder; ++k) phi[first + k] = vals[k];
    return phi;
  }

  /// Design matrix: row i holds the basis values at ts[i].
  Eigen::MatrixXd design_matrix(const Eigen::VectorXd& ts) const {
    Eigen::MatrixXd X = Eigen::MatrixXd::Zero(ts.size(), p_);
    double vals[kOrder];
    for (Eigen::Index i = 0; i < ts.size(); ++i) {
      const int first = nonzero_values(ts[i], vals);
      for (int k = 0; k < kOrder; ++k) X(i, first + k) = vals[k];
    }
    return X;
  }

  /// Gram matrix W with W_kl = integral of phi_k phi_l over [a, b], computed
  /// by Gauss-Legendre per knot span (exact for piecewise-cubic products).
  Eigen::MatrixXd gram() const {
    return detail::gram_by_quadrature(
        [this](double t) { return evaluate(t); }, p_, breakpoints());
  }

  /// Cox-de Boor recursion for the 4 basis functions supported at t.
  /// Returns the index of the first nonzero function; vals receives the
  /// values of functions first .. first+3.
  int nonzero_values(double t, double (&vals)[kOrder]) const {
    if (t < a_ || t > b_)
      throw std::invalid_argument("BasisSystem: t outside [a, b]");
    const int span = find_span(t);
    double left[kOrder], right[kOrder];
    vals[0] = 1.0;
    for (int d = 1; d < kOrder; ++d) {
      left[d] = t - knots_[span + 1 - d];
      right[d] = knots_[span + d] - t;
      double saved = 0.0;
      for (int r = 0; r < d; ++r) {
        const double tmp = vals[r] / (right[r + 1] + left[d - r]);
        vals[r] = saved + right[r + 1] * tmp;
        saved = left[d - r] * tmp;
      }
      vals[d] = saved;
    }
    return span - (kOrder - 1);
  }

private:
  // Knot span index j with knots[j] <= t < knots[j+1], clamped so the right
  // endpoint belongs to the last span.
  int find_span(double t) const {
    if (t >= b_) return p_ - 1;
    const auto it =
        std::upper_bound(knots_.begin() + kOrder, knots_.end() - kOrder, t);
    return static_cast<int>(it - knots_.begin()) - 1;
  }

  double a_, b_;
  int p_;
  std::vector<double> knots_;
};

inline BasisSystem make_basis(double a, double b, int dim) {
  return BasisSystem(a, b, dim);
}

/// n curves sharing one basis; row j of A holds the coefficients of curve j.
struct CurveSet {
  BasisSystem basis;
  Eigen::MatrixXd A;
  std::vector<std::string> labels;

  CurveSet(BasisSystem basis_, Eigen::MatrixXd A_,
           std::vector<std::string> labels_ = {})
      : basis(std::move(basis_)), A(std::move(A_)), labels(std::move(labels_)) {
    if (A.cols() != basis.dim())
      throw std::invalid_argument("CurveSet: coefficient columns != basis dim");
    if (!labels.empty() && static_cast<Eigen::Index>(labels.size()) != A.rows())
      throw std::invalid_argument("CurveSet: label count != curve count");
    if (!A.allFinite())
      throw std::invalid_argument("CurveSet: non-finite coefficients");
  }

  Eigen::Index size() const { return A.rows(); }
};

/// Least-squares basis coefficients for many curves observed on a common
/// grid: Y rows are per-curve observations on grid_t. The design matrix is
/// factorized once (rank-revealing QR); rank deficiency is an error.
inline Eigen::MatrixXd smooth_many(const Eigen::VectorXd& grid_t,
                                   const Eigen::MatrixXd& Y,
                                   const BasisSystem& basis) {
  const int p = basis.dim();
  if (grid_t.size() < p)
    throw std::invalid_argument("smooth: fewer observations than basis dim");
  if (Y.cols() != grid_t.size())
    throw std::invalid_argument("smooth: observation count != grid size");
  const Eigen::MatrixXd X = basis.design_matrix(grid_t);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  if (qr.rank() < p)
    throw numeric_error(
        "smooth: rank-deficient design (need >= dim distinct abscissas)");
  return qr.solve(Y.transpose()).transpose();
}

/// Single-curve least squares fit; minimizes sum_i (y_i - a'phi(t_i))^2.
inline Eigen::VectorXd smooth(const Eigen::VectorXd& grid_t,
                              const Eigen::VectorXd& grid_y,
                              const BasisSystem& basis) {
  return smooth_many(grid_t, grid_y.transpose(), basis).row(0);
}

/// Curve values: entry (j, i) = a_j' phi(grid[i]).
inline Eigen::MatrixXd eval_curveset(const CurveSet& cs,
                                     const Eigen::VectorXd& grid) {
  return cs.A * cs.basis.design_matrix(grid).transpose();
}

}  // namespace fdanova
