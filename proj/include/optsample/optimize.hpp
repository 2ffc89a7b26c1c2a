#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "layout.hpp"
#include "objective.hpp"
#include "parallel.hpp"
#include "random.hpp"

namespace optsample {

struct SearchConfig {
  int restarts = 20;
  long max_iters = 0;          // 0: 2000 * n * d
  double tol = 1e-10;
  std::uint64_t seed = 0;
  double simplex_scale = 0.0;  // 0: 0.1 * domain diameter
  int threads = 0;             // 0: default_thread_count(); never affects results
};

struct SearchResult {
  PointSet points;                           // lexicographically sorted
  double objective_value = 0.0;              // minimize convention, re-evaluated at `points`
  int starts_tried = 0;
  int best_start_index = 0;
  bool converged = false;
  std::vector<Eigen::Index> candidate_indices;  // discrete searches only, ascending
  std::vector<double> history;               // accepted objective values (greedy_exchange)
};

namespace detail {

// Discrete searches treat values this close (relative) as tied, so that configurations equal in
// exact arithmetic, e.g. mirror images, fall to the index tie-break rather than to round-off.
inline constexpr double kTieTolerance = 1e-12;

inline bool clearly_less(double a, double b) {
  if (!std::isfinite(b)) return a < b;
  return a < b - kTieTolerance * (1.0 + std::abs(b));
}

struct SimplexRun {
  Eigen::VectorXd x;
  double f = std::numeric_limits<double>::infinity();
  bool converged = false;
};

inline PointSet unflatten(const Eigen::VectorXd& v, Eigen::Index n, int d) {
  PointSet p(n, d);
  for (Eigen::Index j = 0; j < n; ++j)
    for (int i = 0; i < d; ++i) p(j, i) = v(j * d + i);
  return p;
}

inline Eigen::VectorXd flatten(const PointSet& p) {
  Eigen::VectorXd v(p.size());
  for (Eigen::Index j = 0; j < p.rows(); ++j)
    for (Eigen::Index i = 0; i < p.cols(); ++i) v(j * p.cols() + i) = p(j, i);
  return v;
}

/**
 * Nelder-Mead with reflection 1, expansion 2, contraction 0.5, shrink 0.5.
 *
 * Stops when the simplex value spread drops below tol * (1 + |f_best|). The simplex is then
 * rebuilt around the best vertex with half the previous edge length while that still helps,
 * which lets the method escape the premature collapses typical of non-smooth objectives.
 */
template <class F>
SimplexRun nelder_mead(F&& f, Eigen::VectorXd x0, const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                       double scale, long max_iters, double tol) {
  const Eigen::Index dim = x0.size();
  SimplexRun best{x0, f(x0), false};
  long iters = 0;
  constexpr int kMaxRebuilds = 4;

  for (int rebuild = 0; rebuild <= kMaxRebuilds && iters < max_iters; ++rebuild) {
    std::vector<Eigen::VectorXd> pts(static_cast<std::size_t>(dim + 1), best.x);
    std::vector<double> vals(static_cast<std::size_t>(dim + 1), best.f);
    for (Eigen::Index i = 0; i < dim; ++i) {
      auto& p = pts[static_cast<std::size_t>(i + 1)];
      p(i) += (p(i) + scale <= hi(i) || p(i) - scale < lo(i)) ? scale : -scale;
      vals[static_cast<std::size_t>(i + 1)] = f(p);
    }

    std::vector<std::size_t> order(pts.size());
    bool converged = false;
    while (iters < max_iters) {
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
      const std::size_t ib = order.front(), iw = order.back(), is = order[order.size() - 2];
      if (vals[iw] - vals[ib] < tol * (1.0 + std::abs(vals[ib]))) {
        converged = true;
        break;
      }
      ++iters;

      Eigen::VectorXd c = Eigen::VectorXd::Zero(dim);
      for (std::size_t k = 0; k + 1 < order.size(); ++k) c += pts[order[k]];
      c /= static_cast<double>(dim);

      const Eigen::VectorXd xr = c + (c - pts[iw]);
      const double fr = f(xr);
      if (fr < vals[ib]) {
        const Eigen::VectorXd xe = c + 2.0 * (xr - c);
        const double fe = f(xe);
        if (fe < fr) {
          pts[iw] = xe, vals[iw] = fe;
        } else {
          pts[iw] = xr, vals[iw] = fr;
        }
        continue;
      }
      if (fr < vals[is]) {
        pts[iw] = xr, vals[iw] = fr;
        continue;
      }
      const bool outside = fr < vals[iw];
      const Eigen::VectorXd xc = outside ? Eigen::VectorXd(c + 0.5 * (xr - c)) : Eigen::VectorXd(c + 0.5 * (pts[iw] - c));
      const double fc = f(xc);
      if (outside ? fc <= fr : fc < vals[iw]) {
        pts[iw] = xc, vals[iw] = fc;
        continue;
      }
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k == ib) continue;
        pts[k] = pts[ib] + 0.5 * (pts[k] - pts[ib]);
        vals[k] = f(pts[k]);
      }
    }

    const auto it = std::min_element(vals.begin(), vals.end());
    const auto kb = static_cast<std::size_t>(it - vals.begin());
    const bool improved = vals[kb] < best.f - tol * (1.0 + std::abs(best.f));
    if (vals[kb] < best.f) best.x = pts[kb], best.f = vals[kb];
    best.converged = converged;
    if (rebuild > 0 && !improved) break;
    scale *= 0.5;
  }
  return best;
}

inline SearchResult finish(const ObjectiveSpec& spec, PointSet points) {
  spec.domain().clamp(points);
  SearchResult r;
  r.points = sorted_lex(points);
  r.objective_value = spec(r.points);
  return r;
}

inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // r == C(n-k+i, i), always integral
    if (r > cap) return cap + 1;
  }
  return r;
}

inline PointSet select_rows(const PointSet& candidates, const std::vector<Eigen::Index>& idx) {
  PointSet p(static_cast<Eigen::Index>(idx.size()), candidates.cols());
  for (std::size_t j = 0; j < idx.size(); ++j) p.row(static_cast<Eigen::Index>(j)) = candidates.row(idx[j]);
  return p;
}

inline void check_candidates(const ObjectiveSpec& spec, const PointSet& candidates, Eigen::Index n) {
  if (n != spec.n()) throw InvalidArgument("point count must match the objective's n");
  if (candidates.cols() != spec.dim()) throw InvalidArgument("candidate dimension mismatch");
  if (candidates.rows() < n) throw InvalidArgument("fewer candidates than requested points");
}

}  // namespace detail

/**
 * Multistart Nelder-Mead over the flattened n*d coordinate vector, clamped into the box.
 *
 * Start 0 is the equally spaced configuration; start s > 0 is uniform in the box from the
 * stream split off `seed` at index s. Starts run in parallel; the lowest final value wins,
 * ties going to the lower start index.
 */
inline SearchResult optimize_points(const ObjectiveSpec& spec, const SearchConfig& config = {}) {
  if (config.restarts < 1) throw InvalidArgument("restarts must be positive");
  const Eigen::Index n = spec.n();
  const int d = spec.dim();
  const BoxDomain& box = spec.domain();
  const long max_iters = config.max_iters > 0 ? config.max_iters : 2000L * n * d;
  const double scale = config.simplex_scale > 0.0 ? config.simplex_scale : 0.1 * box.diameter();

  Eigen::VectorXd lo(n * d), hi(n * d);
  for (Eigen::Index j = 0; j < n; ++j) {
    lo.segment(j * d, d) = box.lo();
    hi.segment(j * d, d) = box.hi();
  }
  const auto objective = [&](const Eigen::VectorXd& v) {
    PointSet p = detail::unflatten(v, n, d);
    box.clamp(p);
    return spec(p);
  };

  std::vector<detail::SimplexRun> runs(static_cast<std::size_t>(config.restarts));
  parallel_for(runs.size(), config.threads, [&](std::size_t s) {
    Eigen::VectorXd x0;
    if (s == 0) {
      x0 = detail::flatten(start_configuration(box, n));
    } else {
      Stream stream = Stream::split(config.seed, /*tag=*/1, s);
      x0.resize(n * d);
      for (Eigen::Index k = 0; k < n * d; ++k) x0(k) = stream.uniform(lo(k), hi(k));
    }
    runs[s] = detail::nelder_mead(objective, std::move(x0), lo, hi, scale, max_iters, config.tol);
  });

  std::size_t best = 0;
  for (std::size_t s = 1; s < runs.size(); ++s)
    if (runs[s].f < runs[best].f) best = s;
  if (is_penalty(runs[best].f)) throw SearchFailed("every start ended in the penalty region", runs[best].f);

  SearchResult r = detail::finish(spec, detail::unflatten(runs[best].x, n, d));
  r.starts_tried = config.restarts;
  r.best_start_index = static_cast<int>(best);
  r.converged = runs[best].converged;
  return r;
}

/**
 * Exchange search over a candidate set. Starts from the candidates nearest the equally
 * spaced configuration; each held point is swapped for the unused candidate giving the
 * best strict improvement, or, failing that, for a lower-index candidate that ties.
 * Stops after a sweep without a swap or `sweeps` sweeps.
 */
inline SearchResult greedy_exchange(const ObjectiveSpec& spec, const PointSet& candidates, Eigen::Index n,
                                    int sweeps = 100) {
  detail::check_candidates(spec, candidates, n);
  const Eigen::Index c = candidates.rows();
  const PointSet target = start_configuration(spec.domain(), n);

  std::vector<Eigen::Index> held;
  std::vector<bool> used(static_cast<std::size_t>(c), false);
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::Index pick = -1;
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < c; ++k) {
      if (used[static_cast<std::size_t>(k)]) continue;
      const double dist = (candidates.row(k) - target.row(j)).norm();
      if (dist < best) best = dist, pick = k;
    }
    held.push_back(pick);
    used[static_cast<std::size_t>(pick)] = true;
  }

  double current = spec(detail::select_rows(candidates, held));
  std::vector<double> history{current};
  bool settled = false;
  for (int sweep = 0; sweep < sweeps && !settled; ++sweep) {
    settled = true;
    for (Eigen::Index pos = 0; pos < n; ++pos) {
      Eigen::Index swap_in = -1;
      double best = current;
      std::vector<Eigen::Index> trial = held;
      for (Eigen::Index k = 0; k < c; ++k) {
        if (used[static_cast<std::size_t>(k)]) continue;
        trial[static_cast<std::size_t>(pos)] = k;
        const double v = spec(detail::select_rows(candidates, trial));
        if (detail::clearly_less(v, best)) {
          best = v, swap_in = k;
        } else if (swap_in < 0 && k < held[static_cast<std::size_t>(pos)] && !detail::clearly_less(best, v)) {
          best = v, swap_in = k;  // tie with the current set: move toward lower indices
        }
      }
      if (swap_in >= 0) {
        used[static_cast<std::size_t>(held[static_cast<std::size_t>(pos)])] = false;
        used[static_cast<std::size_t>(swap_in)] = true;
        held[static_cast<std::size_t>(pos)] = swap_in;
        current = best;
        history.push_back(current);
        settled = false;
      }
    }
  }
  if (is_penalty(current)) throw SearchFailed("greedy exchange ended in the penalty region", current);

  SearchResult r = detail::finish(spec, detail::select_rows(candidates, held));
  std::sort(held.begin(), held.end());
  r.candidate_indices = held;
  r.history = std::move(history);
  r.starts_tried = 1;
  r.converged = settled;
  return r;
}

/// Exact discrete optimum over all n-subsets of the candidates (at most 10^6 subsets).
/// Ties go to the lexicographically smallest index tuple.
inline SearchResult brute_force(const ObjectiveSpec& spec, const PointSet& candidates, Eigen::Index n) {
  detail::check_candidates(spec, candidates, n);
  constexpr std::uint64_t kBudget = 1'000'000;
  const auto c = static_cast<std::uint64_t>(candidates.rows());
  const std::uint64_t total = detail::binomial_capped(c, static_cast<std::uint64_t>(n), kBudget);
  if (total > kBudget) throw InvalidArgument("brute_force: more than 10^6 subsets");

  std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), Eigen::Index{0});
  std::vector<Eigen::Index> best_idx = idx;
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    const double v = spec(detail::select_rows(candidates, idx));
    if (detail::clearly_less(v, best)) best = v, best_idx = idx;
    // next combination in lexicographic order
    auto i = static_cast<std::ptrdiff_t>(n) - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<Eigen::Index>(c) - n + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (auto k = static_cast<std::size_t>(i) + 1; k < idx.size(); ++k) idx[k] = idx[k - 1] + 1;
  }
  if (is_penalty(best)) throw SearchFailed("every subset is degenerate", best);

  SearchResult r = detail::finish(spec, detail::select_rows(candidates, best_idx));
  r.candidate_indices = best_idx;
  r.starts_tried = static_cast<int>(total);
  r.converged = true;
  return r;
}

}  // namespace optsample
