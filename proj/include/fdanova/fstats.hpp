#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fdanova/basis.hpp"

namespace fdanova {

/// Mean curve in coefficient form: coef = column means of A.
struct MeanFunction {
  BasisSystem basis;
  Eigen::VectorXd coef;

  double evaluate(double t) const { return basis.evaluate(t).dot(coef); }

  Eigen::VectorXd evaluate_grid(const Eigen::VectorXd& grid) const {
    return basis.design_matrix(grid) * coef;
  }
};

/// (Cross-)covariance surface C(s, t) = phi(s)' S phi(t) in coefficient form.
struct CovarianceSurface {
  BasisSystem basis;
  Eigen::MatrixXd S;

  double evaluate(double s, double t) const {
    return basis.evaluate(s).dot(S * basis.evaluate(t));
  }

  /// Values on a grid x grid lattice.
  Eigen::MatrixXd evaluate_grid(const Eigen::VectorXd& grid) const {
    const Eigen::MatrixXd B = basis.design_matrix(grid);
    return B * S * B.transpose();
  }
};

/// Pointwise variance of the paired differences,
/// K(t,t) = phi(t)' M phi(t) with M the sample covariance of the
/// per-subject coefficient differences (the symmetric arrangement of
/// Sigma_1 - 2 Sigma_12 + Sigma_2; the quadratic forms coincide).
struct KHatFunction {
  BasisSystem basis;
  Eigen::MatrixXd M;

  double evaluate(double t) const {
    const Eigen::VectorXd phi = basis.evaluate(t);
    return phi.dot(M * phi);
  }

  Eigen::VectorXd evaluate_grid(const Eigen::VectorXd& grid) const {
    const Eigen::MatrixXd B = basis.design_matrix(grid);
    return (B * M).cwiseProduct(B).rowwise().sum();
  }
};

/// Per-subject curve pairs observed under two conditions. Pairing is by
/// subject label whenever both sets carry labels (rows of cond2 are
/// reordered to match cond1); unlabeled sets pair positionally.
struct PairedSample {
  std::vector<std::string> subjects;
  CurveSet cond1;
  CurveSet cond2;

  PairedSample(CurveSet c1, CurveSet c2)
      : subjects(), cond1(std::move(c1)), cond2(align(cond1, std::move(c2))) {
    subjects = cond1.labels;
    if (subjects.empty())
      for (Eigen::Index j = 0; j < cond1.size(); ++j)
        subjects.push_back("subject_" + std::to_string(j + 1));
  }

  Eigen::Index size() const { return cond1.size(); }

  const BasisSystem& basis() const { return cond1.basis; }

  /// Coefficient differences, row j = a_j1 - a_j2.
  Eigen::MatrixXd diff_coefs() const { return cond1.A - cond2.A; }

private:
  static CurveSet align(const CurveSet& c1, CurveSet c2) {
    if (c1.basis != c2.basis)
      throw std::invalid_argument("PairedSample: conditions use different bases");
    if (c1.size() != c2.size())
      throw std::invalid_argument("PairedSample: condition sizes differ");
    if (c1.labels.empty() || c2.labels.empty()) return c2;
    std::map<std::string, Eigen::Index> where;
    for (Eigen::Index j = 0; j < c2.size(); ++j)
      if (!where.emplace(c2.labels[j], j).second)
        throw std::invalid_argument("PairedSample: duplicate subject label '" +
                                    c2.labels[j] + "'");
    Eigen::MatrixXd A(c2.A.rows(), c2.A.cols());
    for (Eigen::Index j = 0; j < c1.size(); ++j) {
      const auto it = where.find(c1.labels[j]);
      if (it == where.end())
        throw std::invalid_argument("PairedSample: subject '" + c1.labels[j] +
                                    "' missing from condition 2");
      A.row(j) = c2.A.row(it->second);
    }
    return CurveSet(c2.basis, std::move(A), c1.labels);
  }
};

inline MeanFunction mean_function(const CurveSet& cs) {
  if (cs.size() < 1) throw std::invalid_argument("mean_function: empty CurveSet");
  return {cs.basis, cs.A.colwise().mean()};
}

/// Sample (cross-)covariance of coefficient rows with divisor n - 1:
/// S_kl = cov(a_{.1k}, a_{.2l}). Auto-covariance when cs1 and cs2 coincide.
inline CovarianceSurface cov_surface(const CurveSet& cs1, const CurveSet& cs2) {
  if (cs1.basis != cs2.basis)
    throw std::invalid_argument("cov_surface: bases differ");
  const Eigen::Index n = cs1.size();
  if (cs2.size() != n)
    throw std::invalid_argument("cov_surface: sample sizes differ");
  if (!cs1.labels.empty() && !cs2.labels.empty() && cs1.labels != cs2.labels)
    throw std::invalid_argument("cov_surface: mismatched subjects");
  if (n < 2) throw std::invalid_argument("cov_surface: need n >= 2");
  const Eigen::MatrixXd C1 = cs1.A.rowwise() - cs1.A.colwise().mean();
  const Eigen::MatrixXd C2 = cs2.A.rowwise() - cs2.A.colwise().mean();
  return {cs1.basis, C1.transpose() * C2 / double(n - 1)};
}

/// K(t,t), the sample variance of the subject-wise difference curves.
inline KHatFunction khat(const PairedSample& ps) {
  const Eigen::Index n = ps.size();
  if (n < 2) throw std::invalid_argument("khat: need n >= 2 pairs");
  const Eigen::MatrixXd D = ps.diff_coefs();
  const Eigen::MatrixXd C = D.rowwise() - D.colwise().mean();
  return {ps.basis(), C.transpose() * C / double(n - 1)};
}

}  // namespace fdanova
