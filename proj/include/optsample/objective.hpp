#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "core.hpp"
#include "linalg.hpp"
#include "rkhs.hpp"
#include "spectral.hpp"
#include "subspace.hpp"

namespace optsample {

/// tr(bK K[X]^{-1}); equals tr(bK^{1/2} K[X]^{-1} bK^{1/2}). Larger is better, bounded by K_Omega.
inline double trace_objective(const Kernel& kernel, const Measure& measure, const PointSet& x) {
  detail::check_points(kernel, x, "trace_objective");
  return linalg::chol_solve(gram(kernel, x), bk_matrix(kernel, measure, x)).solution.trace();
}

/// tr(Lambda D^T K[X]^{-1} D Lambda) with D(k,i) = e_i(x_k), Lambda = diag(sqrt(lambda_i)).
/// Matches trace_objective when `basis` holds the full spectrum.
inline double trace_objective_spectral(const EigenBasis& basis, const Kernel& kernel, const PointSet& x) {
  detail::check_points(kernel, x, "trace_objective_spectral");
  if (!(basis.kernel == kernel)) throw InvalidArgument("basis was built for a different kernel");
  const Eigen::MatrixXd d = eval_eigenfunctions(basis, x) * basis.eigenvalues.cwiseSqrt().asDiagonal();
  const Eigen::MatrixXd z = linalg::chol_solve(gram(kernel, x), d).solution;
  return d.cwiseProduct(z).sum();
}

/// lambda_max(K[X] (E E^T)^{-1}) >= 1; +inf when E is singular. Smaller is better.
inline double subspace_objective(const EigenBasis& basis, const Kernel& kernel, const PointSet& x) {
  return subspace_theta(kernel, x, basis);
}

/// max over measure nodes of phi_X. Smaller is better.
inline double supnorm_objective(const Kernel& kernel, const Measure& measure, const PointSet& x) {
  return phi_norm(kernel, x, measure, PhiNorm::sup);
}

enum class ObjectiveKind { trace, trace_spectral, subspace, supnorm };

inline std::string_view to_string(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::trace: return "trace";
    case ObjectiveKind::trace_spectral: return "trace_spectral";
    case ObjectiveKind::subspace: return "subspace";
    case ObjectiveKind::supnorm: return "supnorm";
  }
  return "unknown";
}

inline ObjectiveKind parse_objective_kind(std::string_view name) {
  if (name == "trace") return ObjectiveKind::trace;
  if (name == "trace_spectral") return ObjectiveKind::trace_spectral;
  if (name == "subspace") return ObjectiveKind::subspace;
  if (name == "supnorm") return ObjectiveKind::supnorm;
  throw InvalidArgument("unknown objective '" + std::string(name) + "'");
}

inline bool needs_basis(ObjectiveKind kind) {
  return kind == ObjectiveKind::trace_spectral || kind == ObjectiveKind::subspace;
}

/// Values at or above this mark a degenerate configuration.
inline constexpr double kPenaltyBase = 1e6;

inline bool is_penalty(double value) { return !(value < kPenaltyBase); }

/**
 * A point-configuration objective in minimize convention.
 *
 * Trace objectives are negated; subspace and supnorm are used as is. Configurations
 * with points closer than delta_sep, points outside the box, a numerically singular
 * K[X] (lambda_min <= kEigenFloor * lambda_max), a trace outside [0, K_Omega] or a
 * failing numerical evaluation map to the finite penalty kPenaltyBase * (1 + violation).
 */
class ObjectiveSpec {
public:
  ObjectiveSpec(ObjectiveKind kind, Kernel kernel, Measure measure, BoxDomain domain, Eigen::Index n,
                std::optional<EigenBasis> basis = std::nullopt, double delta_sep = -1.0)
      : kind_(kind), kernel_(kernel), measure_(std::move(measure)), domain_(std::move(domain)), n_(n),
        basis_(std::move(basis)), delta_sep_(delta_sep >= 0.0 ? delta_sep : 1e-6 * domain_.diameter()),
        k_omega_(k_omega(kernel_, measure_)) {
    if (n_ < 1) throw InvalidArgument("objective: n must be positive");
    if (kernel_.dim() != domain_.dim() || measure_.dim() != domain_.dim())
      throw InvalidArgument("objective: kernel, measure and domain dimensions differ");
    if (needs_basis(kind_) != basis_.has_value())
      throw InvalidArgument("objective: eigenbasis must be given exactly for trace_spectral and subspace");
    if (kind_ == ObjectiveKind::subspace && basis_->size() != n_)
      throw InvalidArgument("objective: subspace basis size must equal n");
  }

  /// Builds the eigenbasis the objective kind requires (top-n for subspace, full for trace_spectral).
  static ObjectiveSpec make(ObjectiveKind kind, Kernel kernel, Measure measure, BoxDomain domain, Eigen::Index n,
                            double delta_sep = -1.0) {
    std::optional<EigenBasis> basis;
    if (kind == ObjectiveKind::subspace) basis = kl_eigenbasis(kernel, measure, n);
    if (kind == ObjectiveKind::trace_spectral) basis = kl_full_basis(kernel, measure);
    return ObjectiveSpec(kind, kernel, std::move(measure), std::move(domain), n, std::move(basis), delta_sep);
  }

  ObjectiveKind kind() const { return kind_; }
  const Kernel& kernel() const { return kernel_; }
  const Measure& measure() const { return measure_; }
  const BoxDomain& domain() const { return domain_; }
  const std::optional<EigenBasis>& basis() const { return basis_; }
  Eigen::Index n() const { return n_; }
  int dim() const { return domain_.dim(); }
  double delta_sep() const { return delta_sep_; }

  /// The objective in its natural sign (trace: larger is better). May throw or return +inf.
  double natural(const PointSet& x) const {
    switch (kind_) {
      case ObjectiveKind::trace: return trace_objective(kernel_, measure_, x);
      case ObjectiveKind::trace_spectral: return trace_objective_spectral(*basis_, kernel_, x);
      case ObjectiveKind::subspace: return subspace_objective(*basis_, kernel_, x);
      case ObjectiveKind::supnorm: return supnorm_objective(kernel_, measure_, x);
    }
    return std::numeric_limits<double>::quiet_NaN();
  }

  /// Minimize-convention value with penalty handling; never throws on numerical failure.
  double operator()(const PointSet& x) const {
    if (x.rows() != n_ || x.cols() != dim()) throw InvalidArgument("objective: configuration has the wrong shape");
    double violation = 0.0;
    for (Eigen::Index j = 0; j < x.rows(); ++j) {
      for (Eigen::Index i = 0; i < x.cols(); ++i) {
        const double v = x(j, i);
        if (!std::isfinite(v)) return kPenaltyBase * 2.0;
        violation += std::max(0.0, domain_.lo()(i) - v) + std::max(0.0, v - domain_.hi()(i));
      }
    }
    violation += std::max(0.0, delta_sep_ - min_separation(x));
    if (violation > 0.0) return kPenaltyBase * (1.0 + violation);

    // numerically singular K[X]: graded by log10 of the excess condition number
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(gram(kernel_, x), Eigen::EigenvaluesOnly).eigenvalues();
    const double top = ev(ev.size() - 1);
    const double floor = linalg::kEigenFloor * top;
    if (!(top > 0.0)) return kPenaltyBase * 2.0;
    if (!(ev(0) > floor)) return kPenaltyBase * (1.0 + std::log10(floor / std::max(ev(0), floor * 1e-20)) + 1e-3);

    double value;
    try {
      value = natural(x);
    } catch (const SingularMatrix&) {
      return kPenaltyBase;
    }
    if (kind_ == ObjectiveKind::trace || kind_ == ObjectiveKind::trace_spectral) {
      if (!(value >= -kRangeSlack * k_omega_ && value <= (1.0 + kRangeSlack) * k_omega_)) return kPenaltyBase;
      value = -value;
    }
    if (!std::isfinite(value) || value >= kPenaltyBase) return kPenaltyBase;
    return value;
  }

private:
  ObjectiveKind kind_;
  Kernel kernel_;
  Measure measure_;
  BoxDomain domain_;
  Eigen::Index n_;
  std::optional<EigenBasis> basis_;
  double delta_sep_;
  double k_omega_;
  static constexpr double kRangeSlack = 1e-9;
};

}  // namespace optsample
