#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "core.hpp"
#include "linalg.hpp"

namespace optsample {

/// f = sum_j c_j K(z_j, .)
struct Expansion {
  PointSet centers;
  Eigen::VectorXd coefficients;
  Kernel kernel;

  Expansion(PointSet centers_, Eigen::VectorXd coefficients_, Kernel kernel_)
      : centers(std::move(centers_)), coefficients(std::move(coefficients_)), kernel(kernel_) {
    if (centers.rows() != coefficients.size()) throw InvalidArgument("expansion: center/coefficient count mismatch");
    if (centers.rows() > 0 && centers.cols() != kernel.dim())
      throw InvalidArgument("expansion: center dimension does not match kernel");
  }
};

/// Minimal-norm interpolant sum_j alpha_j K(x_j, .) through samples at `points`.
struct Interpolant {
  PointSet points;
  Eigen::VectorXd coefficients;
  Kernel kernel;
  double jitter = 0.0;  // diagonal shift needed to factor K[X], 0 when none

  Expansion as_expansion() const { return Expansion(points, coefficients, kernel); }
};

namespace detail {

inline void check_points(const Kernel& kernel, const PointSet& x, const char* what) {
  if (x.rows() == 0) throw InvalidArgument(std::string(what) + ": empty point set");
  if (x.cols() != kernel.dim()) throw InvalidArgument(std::string(what) + ": dimension mismatch");
}

inline Eigen::VectorXd kernel_diagonal(const Kernel& kernel, const PointSet& q) {
  Eigen::VectorXd d(q.rows());
  for (Eigen::Index i = 0; i < q.rows(); ++i) d(i) = kernel(q.row(i), q.row(i));
  return d;
}

}  // namespace detail

/// Power function phi_X at every row of `queries`:
/// phi_X(x)^2 = K(x,x) - k_x^T K[X]^{-1} k_x, negative round-off clamped to 0.
inline Eigen::VectorXd power_function(const Kernel& kernel, const PointSet& x, const PointSet& queries) {
  detail::check_points(kernel, x, "power_function");
  detail::check_points(kernel, queries, "power_function");
  const Eigen::MatrixXd kx = gram(kernel, x, queries);
  const Eigen::MatrixXd z = linalg::chol_solve(gram(kernel, x), kx).solution;
  const Eigen::VectorXd proj = kx.cwiseProduct(z).colwise().sum().transpose();
  const Eigen::VectorXd diag = detail::kernel_diagonal(kernel, queries);
  return (diag - proj).cwiseMax(0.0).cwiseSqrt();
}

/// phi_X at a single point given as any Eigen vector of length d.
template <class A>
double power_function_at(const Kernel& kernel, const PointSet& x, const Eigen::MatrixBase<A>& point) {
  PointSet q(1, point.size());
  for (Eigen::Index i = 0; i < point.size(); ++i) q(0, i) = point(i);
  return power_function(kernel, x, q)(0);
}

enum class PhiNorm { l2, sup };

/// L2(mu) or max-over-nodes norm of phi_X on the measure's nodes.
inline double phi_norm(const Kernel& kernel, const PointSet& x, const Measure& measure, PhiNorm p) {
  const Eigen::VectorXd phi = power_function(kernel, x, measure.nodes());
  if (p == PhiNorm::sup) return phi.maxCoeff();
  return std::sqrt(std::max(0.0, integrate(measure, phi.cwiseAbs2())));
}

inline Interpolant min_norm_interpolant(const Kernel& kernel, const PointSet& x, const Eigen::VectorXd& values) {
  detail::check_points(kernel, x, "min_norm_interpolant");
  if (values.size() != x.rows()) throw InvalidArgument("min_norm_interpolant: value count mismatch");
  auto solved = linalg::chol_solve(gram(kernel, x), values);
  return Interpolant{x, solved.solution.col(0), kernel, solved.jitter};
}

inline Eigen::VectorXd eval_expansion(const Expansion& f, const PointSet& queries) {
  if (f.centers.rows() == 0) return Eigen::VectorXd::Zero(queries.rows());
  if (queries.rows() == 0) return Eigen::VectorXd(0);
  return gram(f.kernel, queries, f.centers) * f.coefficients;
}

inline Eigen::VectorXd eval_expansion(const Interpolant& f, const PointSet& queries) {
  return eval_expansion(f.as_expansion(), queries);
}

/// (f, g)_H = c^T K[Z, W] d by the reproducing property.
inline double rkhs_inner(const Expansion& f, const Expansion& g) {
  if (!(f.kernel == g.kernel)) throw InvalidArgument("rkhs_inner: expansions use different kernels");
  if (f.centers.rows() == 0 || g.centers.rows() == 0) return 0.0;
  return f.coefficients.dot(gram(f.kernel, f.centers, g.centers) * g.coefficients);
}

inline double rkhs_norm(const Expansion& f) { return std::sqrt(std::max(0.0, rkhs_inner(f, f))); }

}  // namespace optsample
