#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <optional>

#include "core.hpp"

namespace optsample {

namespace detail {

// k with k^d == n, if any.
inline std::optional<Eigen::Index> integer_root(Eigen::Index n, int d) {
  auto k = static_cast<Eigen::Index>(std::llround(std::pow(static_cast<double>(n), 1.0 / d)));
  for (Eigen::Index c = std::max<Eigen::Index>(1, k - 1); c <= k + 1; ++c) {
    Eigen::Index p = 1;
    for (int i = 0; i < d; ++i) p *= c;
    if (p == n) return c;
  }
  return std::nullopt;
}

inline Eigen::VectorXd axis_points(double lo, double hi, Eigen::Index k) {
  if (k == 1) return Eigen::VectorXd::Constant(1, 0.5 * (lo + hi));
  Eigen::VectorXd out(k);
  for (Eigen::Index i = 0; i < k; ++i) out(i) = lo + static_cast<double>(i) * (hi - lo) / static_cast<double>(k - 1);
  out(k - 1) = hi;
  return out;
}

inline PointSet tensor_grid(const BoxDomain& domain, Eigen::Index k) {
  const int d = domain.dim();
  Eigen::Index total = 1;
  for (int i = 0; i < d; ++i) total *= k;
  std::vector<Eigen::VectorXd> axes;
  for (int i = 0; i < d; ++i) axes.push_back(axis_points(domain.lo()(i), domain.hi()(i), k));
  PointSet out(total, d);
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(d), 0);
  for (Eigen::Index row = 0; row < total; ++row) {
    for (int i = 0; i < d; ++i) out(row, i) = axes[static_cast<std::size_t>(i)](idx[static_cast<std::size_t>(i)]);
    for (int i = d - 1; i >= 0; --i) {
      if (++idx[static_cast<std::size_t>(i)] < k) break;
      idx[static_cast<std::size_t>(i)] = 0;
    }
  }
  return out;
}

}  // namespace detail

/**
 * Equally spaced baseline: in 1D x_i = lo + i (hi - lo)/(n - 1), endpoints included,
 * and the midpoint for n = 1. In d dimensions the tensor product of the 1D rule,
 * which requires n = k^d.
 */
inline PointSet equally_spaced(const BoxDomain& domain, Eigen::Index n) {
  if (n < 1) throw InvalidArgument("equally_spaced: n must be positive");
  const auto k = detail::integer_root(n, domain.dim());
  if (!k) throw InvalidArgument("equally_spaced: n must be a perfect d-th power in d dimensions");
  return detail::tensor_grid(domain, *k);
}

/// Equally spaced configuration when it exists; otherwise n entries spread evenly
/// (in lexicographic order) over the smallest tensor grid with at least n points.
inline PointSet start_configuration(const BoxDomain& domain, Eigen::Index n) {
  if (detail::integer_root(n, domain.dim())) return equally_spaced(domain, n);
  Eigen::Index k = 1;
  auto pow_d = [&](Eigen::Index c) {
    Eigen::Index p = 1;
    for (int i = 0; i < domain.dim(); ++i) p *= c;
    return p;
  };
  while (pow_d(k) < n) ++k;
  const PointSet grid = detail::tensor_grid(domain, k);
  const Eigen::Index total = grid.rows();
  PointSet out(n, domain.dim());
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto row = n == 1 ? total / 2 : static_cast<Eigen::Index>(std::llround(static_cast<double>(i) * static_cast<double>(total - 1) / static_cast<double>(n - 1)));
    out.row(i) = grid.row(row);
  }
  return out;
}

}  // namespace optsample
