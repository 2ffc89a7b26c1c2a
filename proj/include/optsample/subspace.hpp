#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>

#include "linalg.hpp"
#include "rkhs.hpp"
#include "spectral.hpp"

namespace optsample {

namespace detail {

inline void check_basis_match(const Kernel& kernel, const PointSet& x, const EigenBasis& basis) {
  if (basis.size() != x.rows()) throw InvalidArgument("basis size must equal the number of points");
  if (!(basis.kernel == kernel)) throw InvalidArgument("basis was built for a different kernel");
  check_points(kernel, x, "subspace distance");
}

}  // namespace detail

/// theta = lambda_max(K[X] (E E^T)^{-1}) with E(j,k) = e_k(x_j); +inf when E E^T is singular.
inline double subspace_theta(const Kernel& kernel, const PointSet& x, const EigenBasis& basis) {
  detail::check_basis_match(kernel, x, basis);
  const Eigen::MatrixXd e = eval_eigenfunctions(basis, x);
  return linalg::max_gen_eig(gram(kernel, x), e * e.transpose());
}

/// dist(S_X, S_T) = sqrt(1 - 1/theta); 1 when E is singular.
inline double subspace_distance(const Kernel& kernel, const PointSet& x, const EigenBasis& basis) {
  const double theta = subspace_theta(kernel, x, basis);
  if (!std::isfinite(theta)) return 1.0;
  return std::sqrt(std::clamp(1.0 - 1.0 / theta, 0.0, 1.0));
}

/**
 * ||P_U - P_V|| computed from explicit projectors, U = span{K(x_j,.)}, V = span{e_k}.
 *
 * The joint span is orthonormalized through the eigendecomposition of its Gram matrix;
 * both projectors are then formed in those coordinates.
 */
inline double subspace_distance_direct(const Kernel& kernel, const PointSet& x, const EigenBasis& basis) {
  detail::check_basis_match(kernel, x, basis);
  const Eigen::Index n = x.rows();
  const Eigen::MatrixXd kyy = gram(kernel, basis.measure.nodes());

  Eigen::MatrixXd g(2 * n, 2 * n);
  const Eigen::MatrixXd e = eval_eigenfunctions(basis, x);
  g.topLeftCorner(n, n) = gram(kernel, x);
  g.topRightCorner(n, n) = e;
  g.bottomLeftCorner(n, n) = e.transpose();
  g.bottomRightCorner(n, n) = basis.coeffs * kyy * basis.coeffs.transpose();

  const auto eig = linalg::sym_eig(g);
  const Eigen::Index rank = detail::count_above_floor(eig.values);
  // Coordinates of each spanning function in the orthonormal joint basis: column s of Lambda^{1/2} V^T.
  const Eigen::MatrixXd coords =
      eig.values.head(rank).cwiseSqrt().asDiagonal() * eig.vectors.leftCols(rank).transpose();

  const auto projector = [](const Eigen::MatrixXd& cols) {
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols, Eigen::ComputeThinU);
    const Eigen::VectorXd& sv = svd.singularValues();
    Eigen::Index r = 0;
    while (r < sv.size() && sv(r) > 1e-6 * sv(0)) ++r;
    const Eigen::MatrixXd q = svd.matrixU().leftCols(r);
    return Eigen::MatrixXd(q * q.transpose());
  };
  const Eigen::MatrixXd diff = projector(coords.leftCols(n)) - projector(coords.rightCols(n));
  const auto spectrum = linalg::sym_eig(diff).values;
  return std::max(std::abs(spectrum(0)), std::abs(spectrum(spectrum.size() - 1)));
}

/// 2 K_Omega dist(S_X, S_T): upper bound on E(S_X) - E(S_T).
inline double energy_gap_bound(const Kernel& kernel, const Measure& measure, const PointSet& x,
                               const EigenBasis& basis) {
  return 2.0 * k_omega(kernel, measure) * subspace_distance(kernel, x, basis);
}

}  // namespace optsample
