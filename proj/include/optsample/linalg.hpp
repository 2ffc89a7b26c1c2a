#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace optsample::linalg {

/// Relative eigenvalue floor used wherever an inverse or inverse root is taken.
inline constexpr double kEigenFloor = 1e-12;

struct SymEig {
  Eigen::VectorXd values;   // descending
  Eigen::MatrixXd vectors;  // column i pairs with values(i)
};

inline Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("expected a square matrix");
  return 0.5 * (a + a.transpose());
}

/// Full spectrum of (A + A^T)/2, eigenvalues in descending order.
inline SymEig sym_eig(const Eigen::MatrixXd& a) {
  const Eigen::MatrixXd s = symmetrized(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
  if (solver.info() != Eigen::Success) throw SingularMatrix("symmetric eigensolver did not converge");
  const Eigen::Index n = s.rows();
  SymEig out{Eigen::VectorXd(n), Eigen::MatrixXd(n, n)};
  // Eigen returns ascending order.
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = solver.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return out;
}

/// Diagonal shift schedule for Cholesky retries, relative to tr(A)/n.
struct JitterPolicy {
  double initial = 1e-12;
  double maximum = 1e-6;
  double factor = 10.0;
};

struct CholSolve {
  Eigen::MatrixXd solution;
  double jitter = 0.0;  // absolute shift actually added to the diagonal
};

namespace detail {

// Cholesky factor of A + tau I, escalating tau per the policy. Returns the tau used.
inline double factor_with_jitter(const Eigen::MatrixXd& a, const JitterPolicy& policy,
                                 Eigen::LLT<Eigen::MatrixXd>& llt) {
  const Eigen::Index n = a.rows();
  llt.compute(a);
  if (llt.info() == Eigen::Success) return 0.0;
  const double scale = std::abs(a.trace()) / static_cast<double>(n);
  for (double rel = policy.initial; rel <= policy.maximum * (1.0 + 1e-9); rel *= policy.factor) {
    const double tau = rel * scale;
    llt.compute(a + tau * Eigen::MatrixXd::Identity(n, n));
    if (llt.info() == Eigen::Success) return tau;
  }
  throw SingularMatrix("Cholesky factorization failed at maximum jitter");
}

}  // namespace detail

/// Solves A X = B for symmetric positive definite A, retrying with A + tau I on failure.
inline CholSolve chol_solve(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const JitterPolicy& policy = {}) {
  const Eigen::MatrixXd s = symmetrized(a);
  if (b.rows() != s.rows()) throw InvalidArgument("chol_solve: right-hand side has wrong row count");
  Eigen::LLT<Eigen::MatrixXd> llt;
  CholSolve out;
  out.jitter = detail::factor_with_jitter(s, policy, llt);
  out.solution = llt.solve(b);
  return out;
}

/// Symmetric S with S A S = I.
inline Eigen::MatrixXd inv_sqrt(const Eigen::MatrixXd& a) {
  const SymEig eig = sym_eig(a);
  const double top = eig.values(0);
  const Eigen::Index n = eig.values.size();
  if (!(top > 0.0) || eig.values(n - 1) <= kEigenFloor * top)
    throw SingularMatrix("inv_sqrt: eigenvalue below threshold");
  const Eigen::VectorXd d = eig.values.array().rsqrt();
  return eig.vectors * d.asDiagonal() * eig.vectors.transpose();
}

/**
 * Largest theta with A v = theta B v, i.e. lambda_max(A B^{-1}).
 *
 * B is whitened by its Cholesky factor: theta = lambda_max(L^{-1} A L^{-T}).
 * Returns +inf when B is numerically singular: its smallest eigenvalue is at or
 * below kEigenFloor times the larger of lambda_max(A) and lambda_max(B).
 */
inline double max_gen_eig(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const JitterPolicy& policy = {}) {
  const Eigen::MatrixXd sa = symmetrized(a);
  const Eigen::MatrixXd sb = symmetrized(b);
  if (sa.rows() != sb.rows()) throw InvalidArgument("max_gen_eig: size mismatch");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eb(sb, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ea(sa, Eigen::EigenvaluesOnly);
  const double scale = std::max(std::abs(ea.eigenvalues().maxCoeff()), std::abs(eb.eigenvalues().maxCoeff()));
  if (!(scale > 0.0) || eb.eigenvalues().minCoeff() <= kEigenFloor * scale)
    return std::numeric_limits<double>::infinity();

  Eigen::LLT<Eigen::MatrixXd> llt;
  try {
    detail::factor_with_jitter(sb, policy, llt);
  } catch (const SingularMatrix&) {
    return std::numeric_limits<double>::infinity();
  }
  const auto l = llt.matrixL();
  Eigen::MatrixXd w = l.solve(sa);                 // L^{-1} A
  w = l.solve(w.transpose()).transpose().eval();   // L^{-1} A L^{-T}
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ew(0.5 * (w + w.transpose()), Eigen::EigenvaluesOnly);
  return ew.eigenvalues().maxCoeff();
}

}  // namespace optsample::linalg
