#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace optsample {

/// Point sets are stored row-wise: one row per point, one column per coordinate.
using PointSet = Eigen::MatrixXd;

enum class KernelFamily { gaussian, sinc, exponential };

inline std::string_view to_string(KernelFamily family) {
  switch (family) {
    case KernelFamily::gaussian: return "gaussian";
    case KernelFamily::sinc: return "sinc";
    case KernelFamily::exponential: return "exponential";
  }
  return "unknown";
}

inline KernelFamily parse_kernel_family(std::string_view name) {
  if (name == "gaussian") return KernelFamily::gaussian;
  if (name == "sinc") return KernelFamily::sinc;
  if (name == "exponential") return KernelFamily::exponential;
  throw InvalidArgument("unknown kernel family '" + std::string(name) + "'");
}

namespace detail {

// sin(pi t) / (pi t) with the removable singularity filled in.
inline double sinc(double t) {
  const double a = std::numbers::pi * t;
  if (std::abs(a) < 1e-6) return 1.0 - a * a / 6.0;
  return std::sin(a) / a;
}

}  // namespace detail

/**
 * Unit-diagonal positive-definite kernels on R^d:
 *   gaussian     exp(-|x-y|^2)
 *   sinc         prod_i sin(pi(x_i-y_i)) / (pi(x_i-y_i))
 *   exponential  exp(-|x-y|)
 */
class Kernel {
public:
  Kernel(KernelFamily family, int dim) : family_(family), dim_(dim) {
    if (dim < 1) throw InvalidArgument("kernel dimension must be positive");
  }

  KernelFamily family() const { return family_; }
  int dim() const { return dim_; }

  /// Unchecked evaluation; x and y are any Eigen vector expressions of length dim().
  template <class A, class B>
  double operator()(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) const {
    switch (family_) {
      case KernelFamily::gaussian: {
        double s = 0.0;
        for (Eigen::Index i = 0; i < x.size(); ++i) {
          const double t = x(i) - y(i);
          s += t * t;
        }
        return std::exp(-s);
      }
      case KernelFamily::sinc: {
        double p = 1.0;
        for (Eigen::Index i = 0; i < x.size(); ++i) p *= detail::sinc(x(i) - y(i));
        return p;
      }
      case KernelFamily::exponential: {
        double s = 0.0;
        for (Eigen::Index i = 0; i < x.size(); ++i) {
          const double t = x(i) - y(i);
          s += t * t;
        }
        return std::exp(-std::sqrt(s));
      }
    }
    return std::numeric_limits<double>::quiet_NaN();
  }

  bool operator==(const Kernel&) const = default;

private:
  KernelFamily family_;
  int dim_;
};

/// Checked kernel evaluation K(x, y).
template <class A, class B>
double eval(const Kernel& kernel, const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  if (x.size() != kernel.dim() || y.size() != kernel.dim())
    throw InvalidArgument("point dimension does not match kernel dimension");
  return kernel(x, y);
}

/// Kernel matrix [K(a_j, b_k)] between the rows of a and b.
inline Eigen::MatrixXd gram(const Kernel& kernel, const PointSet& a, const PointSet& b) {
  if (a.rows() == 0 || b.rows() == 0) throw InvalidArgument("gram: empty point list");
  if (a.cols() != kernel.dim() || b.cols() != kernel.dim())
    throw InvalidArgument("gram: point dimension does not match kernel dimension");
  Eigen::MatrixXd g(a.rows(), b.rows());
  const bool same = &a == &b;
  for (Eigen::Index j = 0; j < a.rows(); ++j) {
    for (Eigen::Index k = same ? j : 0; k < b.rows(); ++k) {
      g(j, k) = kernel(a.row(j), b.row(k));
      if (same) g(k, j) = g(j, k);
    }
  }
  return g;
}

inline Eigen::MatrixXd gram(const Kernel& kernel, const PointSet& a) { return gram(kernel, a, a); }

/// Axis-aligned box [lo_1, hi_1] x ... x [lo_d, hi_d].
class BoxDomain {
public:
  BoxDomain(Eigen::VectorXd lo, Eigen::VectorXd hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.size() == 0 || lo_.size() != hi_.size())
      throw InvalidArgument("box bounds must be nonempty and of equal length");
    for (Eigen::Index i = 0; i < lo_.size(); ++i)
      if (!(lo_(i) < hi_(i))) throw InvalidArgument("box requires lo < hi on every axis");
  }

  /// The cube [lo, hi]^dim.
  static BoxDomain cube(double lo, double hi, int dim) {
    return BoxDomain(Eigen::VectorXd::Constant(dim, lo), Eigen::VectorXd::Constant(dim, hi));
  }

  int dim() const { return static_cast<int>(lo_.size()); }
  const Eigen::VectorXd& lo() const { return lo_; }
  const Eigen::VectorXd& hi() const { return hi_; }
  double diameter() const { return (hi_ - lo_).norm(); }
  double volume() const { return (hi_ - lo_).prod(); }
  Eigen::VectorXd center() const { return 0.5 * (lo_ + hi_); }

  template <class A>
  bool contains(const Eigen::MatrixBase<A>& x) const {
    for (Eigen::Index i = 0; i < lo_.size(); ++i)
      if (x(i) < lo_(i) || x(i) > hi_(i)) return false;
    return true;
  }

  /// Clamps every row of `points` into the box in place.
  void clamp(PointSet& points) const {
    for (Eigen::Index j = 0; j < points.rows(); ++j)
      for (Eigen::Index i = 0; i < points.cols(); ++i)
        points(j, i) = std::clamp(points(j, i), lo_(i), hi_(i));
  }

  bool operator==(const BoxDomain& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

private:
  Eigen::VectorXd lo_;
  Eigen::VectorXd hi_;
};

namespace detail {

inline bool lex_less(const PointSet& p, Eigen::Index a, Eigen::Index b) {
  for (Eigen::Index i = 0; i < p.cols(); ++i) {
    if (p(a, i) < p(b, i)) return true;
    if (p(a, i) > p(b, i)) return false;
  }
  return false;
}

inline std::vector<Eigen::Index> lex_order(const PointSet& p) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(p.rows()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return lex_less(p, a, b); });
  return order;
}

}  // namespace detail

/// Rows sorted lexicographically; the canonical representative of an unordered point set.
inline PointSet sorted_lex(const PointSet& points) {
  const auto order = detail::lex_order(points);
  PointSet out(points.rows(), points.cols());
  for (std::size_t j = 0; j < order.size(); ++j) out.row(static_cast<Eigen::Index>(j)) = points.row(order[j]);
  return out;
}

/// Smallest pairwise Euclidean distance; +inf for fewer than two points.
inline double min_separation(const PointSet& points) {
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < points.rows(); ++j)
    for (Eigen::Index k = j + 1; k < points.rows(); ++k)
      best = std::min(best, (points.row(j) - points.row(k)).norm());
  return best;
}

/// A finite positive measure given by weighted distinct nodes.
class Measure {
public:
  Measure(PointSet nodes, Eigen::VectorXd weights) : nodes_(std::move(nodes)), weights_(std::move(weights)) {
    if (nodes_.rows() == 0) throw InvalidArgument("measure needs at least one node");
    if (nodes_.rows() != weights_.size()) throw InvalidArgument("measure: node/weight count mismatch");
    for (Eigen::Index k = 0; k < weights_.size(); ++k)
      if (!(weights_(k) > 0.0) || !std::isfinite(weights_(k)))
        throw InvalidArgument("measure weights must be positive and finite");
    const auto order = detail::lex_order(nodes_);
    for (std::size_t k = 1; k < order.size(); ++k)
      if (nodes_.row(order[k]) == nodes_.row(order[k - 1]))
        throw InvalidArgument("measure nodes must be pairwise distinct");
  }

  const PointSet& nodes() const { return nodes_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  Eigen::Index size() const { return nodes_.rows(); }
  int dim() const { return static_cast<int>(nodes_.cols()); }
  double mass() const { return weights_.sum(); }

private:
  PointSet nodes_;
  Eigen::VectorXd weights_;
};

/// Midpoint rule on a box: resolution[i] equal cells per axis, node at each cell centre,
/// weight = cell volume. A single resolution entry applies to every axis.
/// Nodes are emitted in lexicographic order (last axis fastest).
inline Measure grid_measure(const BoxDomain& domain, const std::vector<int>& resolution) {
  const int d = domain.dim();
  std::vector<int> res = resolution;
  if (res.size() == 1 && d > 1) res.assign(static_cast<std::size_t>(d), resolution.front());
  if (static_cast<int>(res.size()) != d) throw InvalidArgument("grid resolution must have one entry per axis");
  for (int r : res)
    if (r < 2) throw InvalidArgument("grid resolution must be at least 2 per axis");

  Eigen::VectorXd width(d);
  Eigen::Index total = 1;
  for (int i = 0; i < d; ++i) {
    width(i) = (domain.hi()(i) - domain.lo()(i)) / res[static_cast<std::size_t>(i)];
    total *= res[static_cast<std::size_t>(i)];
  }
  const double cell = width.prod();

  PointSet nodes(total, d);
  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  for (Eigen::Index row = 0; row < total; ++row) {
    for (int i = 0; i < d; ++i)
      nodes(row, i) = domain.lo()(i) + (idx[static_cast<std::size_t>(i)] + 0.5) * width(i);
    for (int i = d - 1; i >= 0; --i) {
      if (++idx[static_cast<std::size_t>(i)] < res[static_cast<std::size_t>(i)]) break;
      idx[static_cast<std::size_t>(i)] = 0;
    }
  }
  return Measure(std::move(nodes), Eigen::VectorXd::Constant(total, cell));
}

/// Uniform probability on a finite point set: weight 1/m per point.
inline Measure discrete_uniform_measure(const PointSet& points) {
  const Eigen::Index m = points.rows();
  if (m == 0) throw InvalidArgument("discrete measure needs at least one point");
  return Measure(points, Eigen::VectorXd::Constant(m, 1.0 / static_cast<double>(m)));
}

/// sum_k w_k * values_k
inline double integrate(const Measure& measure, const Eigen::VectorXd& values) {
  if (values.size() != measure.size()) throw InvalidArgument("integrate: value count does not match node count");
  return measure.weights().dot(values);
}

}  // namespace optsample
