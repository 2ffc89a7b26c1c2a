#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <vector>

#include "core.hpp"
#include "layout.hpp"
#include "objective.hpp"
#include "optimize.hpp"
#include "parallel.hpp"
#include "random.hpp"
#include "rkhs.hpp"

namespace optsample {

struct TargetSpec {
  int terms_min = 5;
  int terms_max = 15;
  double coeff_lo = -1.0;
  double coeff_hi = 1.0;
};

enum class MeasureType { grid, nodes };

/// Either a midpoint grid (Lebesgue measure) or a uniform discrete measure on explicit nodes.
struct MeasureSpec {
  MeasureType type = MeasureType::grid;
  std::vector<int> resolution;  // grid: per-axis cell counts (one entry = all axes)
  PointSet points;              // nodes: support of the uniform discrete measure

  Measure build(const BoxDomain& domain) const {
    if (type == MeasureType::grid) return grid_measure(domain, resolution);
    return discrete_uniform_measure(points);
  }

  /// Per-axis node count, used to size the finer error-evaluation grid.
  std::vector<int> axis_resolution(int dim) const {
    if (type == MeasureType::grid) {
      if (resolution.size() == 1) return std::vector<int>(static_cast<std::size_t>(dim), resolution.front());
      return resolution;
    }
    const auto k = static_cast<int>(std::lround(std::pow(static_cast<double>(points.rows()), 1.0 / dim)));
    return std::vector<int>(static_cast<std::size_t>(dim), std::max(2, k));
  }
};

/// Default midpoint resolution: 201 nodes in 1D, 41 per axis otherwise.
inline std::vector<int> default_resolution(int dim) {
  return std::vector<int>(static_cast<std::size_t>(dim), dim == 1 ? 201 : 41);
}

struct ExperimentConfig {
  KernelFamily kernel = KernelFamily::gaussian;
  int dim = 1;
  BoxDomain domain = BoxDomain::cube(-3.0, 3.0, 1);
  Eigen::Index n = 12;
  ObjectiveKind objective = ObjectiveKind::trace;
  MeasureSpec measure{MeasureType::grid, {201}, {}};
  int trials = 100;
  TargetSpec target;
  std::uint64_t seed = 0;
  SearchConfig search;
  int error_grid_factor = 4;  // 0: measure errors on the objective's own measure
  double delta_sep = -1.0;    // negative: 1e-6 * domain diameter

  void validate() const {
    if (trials < 1) throw InvalidArgument("trials must be at least 1");
    if (target.terms_min < 1 || target.terms_min > target.terms_max)
      throw InvalidArgument("target terms must satisfy 1 <= terms_min <= terms_max");
    if (target.coeff_lo > target.coeff_hi) throw InvalidArgument("target coeff_range must be ordered");
    if (domain.dim() != dim) throw InvalidArgument("domain dimension does not match dim");
    if (error_grid_factor < 0) throw InvalidArgument("error_grid_factor must be nonnegative");
    if (!detail::integer_root(n, dim)) throw InvalidArgument("n must be a perfect d-th power for the equally spaced baseline");
  }
};

struct ExperimentReport {
  std::vector<double> e_opt;
  std::vector<double> e_equ;
  double mean_improvement = 0.0;
  double std_improvement = 0.0;  // sample standard deviation (divisor trials - 1)
  int count_opt_worse = 0;
  PointSet points_opt;
  PointSet points_equ;
  double objective_opt = 0.0;  // minimize convention
  double objective_equ = 0.0;
  int best_start_index = 0;
  bool converged = false;
  int redraws = 0;  // degenerate targets replaced
};

/// Random kernel expansion: term count, coefficients and centres all uniform, drawn from `stream`.
inline Expansion random_target(const Kernel& kernel, const BoxDomain& domain, const TargetSpec& target,
                               Stream& stream) {
  const auto terms = static_cast<Eigen::Index>(stream.uniform_int(target.terms_min, target.terms_max));
  PointSet centers(terms, domain.dim());
  Eigen::VectorXd coeffs(terms);
  for (Eigen::Index j = 0; j < terms; ++j) {
    coeffs(j) = stream.uniform(target.coeff_lo, target.coeff_hi);
    for (int i = 0; i < domain.dim(); ++i) centers(j, i) = stream.uniform(domain.lo()(i), domain.hi()(i));
  }
  return Expansion(std::move(centers), std::move(coeffs), kernel);
}

/// ||f~ - f|| / ||f|| in L2(mu), f~ the minimal-norm interpolant of f's samples at `points`.
inline double relative_error(const Expansion& f, const PointSet& points, const Measure& measure) {
  const Eigen::VectorXd truth = eval_expansion(f, measure.nodes());
  const double norm2 = integrate(measure, truth.cwiseAbs2());
  if (!(std::sqrt(std::max(0.0, norm2)) > 1e-14)) throw DegenerateTarget("target has numerically zero L2 norm");
  const Interpolant rec = min_norm_interpolant(f.kernel, points, eval_expansion(f, points));
  const Eigen::VectorXd diff = eval_expansion(rec, measure.nodes()) - truth;
  return std::sqrt(std::max(0.0, integrate(measure, diff.cwiseAbs2())) / norm2);
}

/// Mean, sample standard deviation and count_opt_worse of the improvements e_equ - e_opt.
inline void summarize(ExperimentReport& report) {
  const auto t = report.e_opt.size();
  double mean = 0.0;
  report.count_opt_worse = 0;
  for (std::size_t i = 0; i < t; ++i) {
    mean += report.e_equ[i] - report.e_opt[i];
    if (report.e_opt[i] > report.e_equ[i]) ++report.count_opt_worse;
  }
  mean /= static_cast<double>(t);
  double ss = 0.0;
  for (std::size_t i = 0; i < t; ++i) {
    const double dv = (report.e_equ[i] - report.e_opt[i]) - mean;
    ss += dv * dv;
  }
  report.mean_improvement = mean;
  report.std_improvement = t > 1 ? std::sqrt(ss / static_cast<double>(t - 1)) : 0.0;
}

/**
 * Optimal versus equally spaced comparison.
 *
 * Finds points_opt with optimize_points, builds the equally spaced baseline, then for each
 * trial draws a target from the stream split off `seed` at the trial index and records
 * both relative errors. Trials run in parallel; the report does not depend on thread count.
 */
inline ExperimentReport run_experiment(const ExperimentConfig& config, int threads = 0) {
  config.validate();
  const Kernel kernel(config.kernel, config.dim);
  const Measure measure = config.measure.build(config.domain);
  const auto spec = ObjectiveSpec::make(config.objective, kernel, measure, config.domain, config.n, config.delta_sep);

  SearchConfig search = config.search;
  search.threads = threads;
  const SearchResult opt = optimize_points(spec, search);

  ExperimentReport report;
  report.points_opt = opt.points;
  report.points_equ = equally_spaced(config.domain, config.n);
  report.objective_opt = opt.objective_value;
  report.objective_equ = spec(report.points_equ);
  report.best_start_index = opt.best_start_index;
  report.converged = opt.converged;

  std::vector<int> fine = config.measure.axis_resolution(config.dim);
  for (int& r : fine) r *= config.error_grid_factor;
  const Measure error_measure = config.error_grid_factor == 0 ? measure : grid_measure(config.domain, fine);

  const auto trials = static_cast<std::size_t>(config.trials);
  report.e_opt.assign(trials, 0.0);
  report.e_equ.assign(trials, 0.0);
  std::vector<int> redraws(trials, 0);
  parallel_for(trials, threads, [&](std::size_t t) {
    Stream stream = Stream::split(config.seed, /*tag=*/2, t);
    constexpr int kMaxDraws = 100;
    for (int draw = 0;; ++draw) {
      const Expansion f = random_target(kernel, config.domain, config.target, stream);
      try {
        report.e_opt[t] = relative_error(f, report.points_opt, error_measure);
        report.e_equ[t] = relative_error(f, report.points_equ, error_measure);
        return;
      } catch (const DegenerateTarget&) {
        ++redraws[t];
        if (draw + 1 >= kMaxDraws) throw;
      }
    }
  });
  for (int r : redraws) report.redraws += r;
  summarize(report);
  return report;
}

}  // namespace optsample
