#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <vector>

#include "core.hpp"
#include "linalg.hpp"
#include "rkhs.hpp"

namespace optsample {

/**
 * Nystrom representation of the leading eigenfunctions of the integral operator
 * (Tf)(x) = sum_k w_k f(y_k) K(y_k, x) acting on H_K.
 *
 * Eigenfunction i is e_i(x) = sum_k coeffs(i, k) K(y_k, x). The e_i are orthonormal in H_K
 * and satisfy T e_i = eigenvalues(i) e_i.
 */
struct EigenBasis {
  Kernel kernel;
  Measure measure;
  Eigen::VectorXd eigenvalues;  // descending, all positive
  Eigen::MatrixXd coeffs;       // n x m
  std::vector<std::string> warnings;

  Eigen::Index size() const { return eigenvalues.size(); }

  /// Eigenfunction i as a kernel expansion over the measure nodes.
  Expansion function(Eigen::Index i) const {
    return Expansion(measure.nodes(), coeffs.row(i).transpose(), kernel);
  }
};

namespace detail {

struct WeightedSpectrum {
  linalg::SymEig eig;
  Eigen::VectorXd sqrt_w;
};

// M = W^{1/2} K[Y] W^{1/2}, eigenvectors sign-normalized (first nonzero entry positive).
inline WeightedSpectrum weighted_spectrum(const Kernel& kernel, const Measure& measure) {
  if (measure.dim() != kernel.dim()) throw InvalidArgument("measure dimension does not match kernel");
  const Eigen::VectorXd sw = measure.weights().cwiseSqrt();
  const Eigen::MatrixXd m = sw.asDiagonal() * gram(kernel, measure.nodes()) * sw.asDiagonal();
  WeightedSpectrum out{linalg::sym_eig(m), sw};
  auto& v = out.eig.vectors;
  for (Eigen::Index i = 0; i < v.cols(); ++i) {
    const double tiny = 1e-12 * v.col(i).cwiseAbs().maxCoeff();
    for (Eigen::Index k = 0; k < v.rows(); ++k) {
      if (std::abs(v(k, i)) > tiny) {
        if (v(k, i) < 0.0) v.col(i) = -v.col(i);
        break;
      }
    }
  }
  return out;
}

inline Eigen::Index count_above_floor(const Eigen::VectorXd& values) {
  const double top = values(0);
  Eigen::Index r = 0;
  while (r < values.size() && values(r) > linalg::kEigenFloor * top) ++r;
  return r;
}

}  // namespace detail

/// Top-n H_K-orthonormal eigenfunctions of the discretized operator T.
inline EigenBasis kl_eigenbasis(const Kernel& kernel, const Measure& measure, Eigen::Index n) {
  if (n < 1 || n > measure.size()) throw InvalidArgument("kl_eigenbasis: need 1 <= n <= number of nodes");
  const auto spec = detail::weighted_spectrum(kernel, measure);
  const Eigen::VectorXd& lam = spec.eig.values;
  if (!(lam(0) > 0.0) || detail::count_above_floor(lam) < n)
    throw RankDeficient("kl_eigenbasis: fewer than n eigenvalues above threshold");

  EigenBasis basis{kernel, measure, lam.head(n), Eigen::MatrixXd(n, measure.size()), {}};
  for (Eigen::Index i = 0; i < n; ++i)
    basis.coeffs.row(i) = (spec.sqrt_w.cwiseProduct(spec.eig.vectors.col(i)) / std::sqrt(lam(i))).transpose();

  if (n < lam.size()) {
    const double gap = (lam(n - 1) - lam(n)) / lam(n - 1);
    if (gap < 1e-10)
      basis.warnings.push_back("eigenvalue tie at the basis boundary (index " + std::to_string(n) +
                               "); eigensolver order kept");
  }
  return basis;
}

/// Every eigenfunction whose eigenvalue clears the relative floor.
inline EigenBasis kl_full_basis(const Kernel& kernel, const Measure& measure) {
  const auto spec = detail::weighted_spectrum(kernel, measure);
  return kl_eigenbasis(kernel, measure, detail::count_above_floor(spec.eig.values));
}

/// Row j, column k holds e_k(query_j).
inline Eigen::MatrixXd eval_eigenfunctions(const EigenBasis& basis, const PointSet& queries) {
  if (queries.cols() != basis.kernel.dim()) throw InvalidArgument("eval_eigenfunctions: dimension mismatch");
  return gram(basis.kernel, queries, basis.measure.nodes()) * basis.coeffs.transpose();
}

/// bK(k,l) = integral of K(x_k,t) K(t,x_l) dmu(t).
inline Eigen::MatrixXd bk_matrix(const Kernel& kernel, const Measure& measure, const PointSet& x) {
  const Eigen::MatrixXd kxy = gram(kernel, x, measure.nodes());
  Eigen::MatrixXd out = kxy * measure.weights().asDiagonal() * kxy.transpose();
  return 0.5 * (out + out.transpose());
}

/// K_Omega = integral of K(t,t) dmu(t).
inline double k_omega(const Kernel& kernel, const Measure& measure) {
  return integrate(measure, detail::kernel_diagonal(kernel, measure.nodes()));
}

/**
 * E(V) = integral of dist^2(K(t,.), V) dmu(t) for V = span of the given expansions.
 *
 * The span is orthonormalized in H_K and E(V) = K_Omega - sum_j integral |u_j|^2 dmu.
 */
inline double subspace_energy(const Kernel& kernel, const Measure& measure, const std::vector<Expansion>& span) {
  const double total = k_omega(kernel, measure);
  const auto p = static_cast<Eigen::Index>(span.size());
  if (p == 0) return total;

  Eigen::MatrixXd g(p, p);
  Eigen::MatrixXd values(measure.size(), p);
  for (Eigen::Index a = 0; a < p; ++a) {
    const auto& fa = span[static_cast<std::size_t>(a)];
    if (!(fa.kernel == kernel)) throw InvalidArgument("subspace_energy: span uses a different kernel");
    values.col(a) = eval_expansion(fa, measure.nodes());
    for (Eigen::Index b = a; b < p; ++b) g(a, b) = g(b, a) = rkhs_inner(fa, span[static_cast<std::size_t>(b)]);
  }
  const auto eig = linalg::sym_eig(g);
  if (!(eig.values(0) > 0.0) || eig.values(p - 1) <= linalg::kEigenFloor * eig.values(0))
    throw RankDeficient("subspace_energy: span functions are linearly dependent");

  // Orthonormal u = values * V * Lambda^{-1/2}.
  const Eigen::MatrixXd u = values * eig.vectors * eig.values.array().rsqrt().matrix().asDiagonal();
  const Eigen::VectorXd sq = u.cwiseAbs2().rowwise().sum();
  return total - integrate(measure, sq);
}

/// Span {K(x_j, .)} as a list of single-term expansions.
inline std::vector<Expansion> kernel_sections(const Kernel& kernel, const PointSet& x) {
  std::vector<Expansion> out;
  out.reserve(static_cast<std::size_t>(x.rows()));
  for (Eigen::Index j = 0; j < x.rows(); ++j) out.emplace_back(PointSet(x.row(j)), Eigen::VectorXd::Ones(1), kernel);
  return out;
}

/// Span of the basis eigenfunctions as expansions.
inline std::vector<Expansion> basis_functions(const EigenBasis& basis) {
  std::vector<Expansion> out;
  out.reserve(static_cast<std::size_t>(basis.size()));
  for (Eigen::Index i = 0; i < basis.size(); ++i) out.push_back(basis.function(i));
  return out;
}

}  // namespace optsample
