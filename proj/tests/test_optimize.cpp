#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "optsample/closedform.hpp"
#include "optsample/layout.hpp"
#include "optsample/optimize.hpp"

using namespace optsample;

namespace {

PointSet line(std::initializer_list<double> v) {
  PointSet p(static_cast<Eigen::Index>(v.size()), 1);
  Eigen::Index i = 0;
  for (double x : v) p(i++, 0) = x;
  return p;
}

PointSet candidates_1d(Eigen::Index count, double lo, double hi) {
  PointSet p(count, 1);
  for (Eigen::Index i = 0; i < count; ++i) p(i, 0) = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  return p;
}

ObjectiveSpec spec_1d(KernelFamily fam, ObjectiveKind kind, double lo, double hi, int grid, Eigen::Index n) {
  const BoxDomain box = BoxDomain::cube(lo, hi, 1);
  return ObjectiveSpec::make(kind, Kernel(fam, 1), grid_measure(box, {grid}), box, n);
}

void expect_identical(const SearchResult& a, const SearchResult& b) {
  EXPECT_EQ(a.points, b.points);
  EXPECT_EQ(a.objective_value, b.objective_value);
  EXPECT_EQ(a.best_start_index, b.best_start_index);
  EXPECT_EQ(a.converged, b.converged);
  EXPECT_EQ(a.starts_tried, b.starts_tried);
}

}  // namespace

TEST(OptimizePoints, GaussianSinglePointAtCentre) {
  const auto spec = spec_1d(KernelFamily::gaussian, ObjectiveKind::supnorm, -3, 3, 201, 1);
  SearchConfig cfg;
  cfg.restarts = 5;
  const auto r = optimize_points(spec, cfg);
  EXPECT_LT(std::abs(r.points(0, 0)), 0.03);
}

TEST(OptimizePoints, ExponentialTwoPointsMatchClosedForm) {
  for (auto [a, b] : {std::pair{0.0, 1.0}, std::pair{-1.0, 1.0}}) {
    const auto spec = spec_1d(KernelFamily::exponential, ObjectiveKind::supnorm, a, b, 400, 2);
    SearchConfig cfg;
    cfg.restarts = 8;
    const auto r = optimize_points(spec, cfg);
    const auto exact = closedform::exp_two_point_optimal(a, b);
    EXPECT_LT(std::abs(r.points(0, 0) - exact.x1), 0.02);
    EXPECT_LT(std::abs(r.points(1, 0) - exact.x2), 0.02);
  }
}

TEST(OptimizePoints, DeterministicAcrossThreadCounts) {
  const auto spec = spec_1d(KernelFamily::gaussian, ObjectiveKind::trace, -3, 3, 61, 4);
  SearchConfig cfg;
  cfg.restarts = 6;
  cfg.seed = 77;
  cfg.threads = 1;
  const auto one = optimize_points(spec, cfg);
  cfg.threads = 3;
  const auto three = optimize_points(spec, cfg);
  const auto again = optimize_points(spec, cfg);
  expect_identical(one, three);
  expect_identical(three, again);
}

TEST(OptimizePoints, ResultInvariants) {
  for (auto kind : {ObjectiveKind::trace, ObjectiveKind::subspace, ObjectiveKind::supnorm}) {
    const auto spec = spec_1d(KernelFamily::gaussian, kind, -3, 3, 61, 3);
    SearchConfig cfg;
    cfg.restarts = 4;
    cfg.seed = 5;
    const auto r = optimize_points(spec, cfg);
    EXPECT_NEAR(spec(r.points), r.objective_value, 1e-12);
    EXPECT_LE(r.objective_value, spec(start_configuration(spec.domain(), 3)));
    EXPECT_EQ(r.points, sorted_lex(r.points));
    EXPECT_EQ(r.starts_tried, 4);
    EXPECT_FALSE(is_penalty(r.objective_value));
  }
}

TEST(OptimizePoints, TwoDimensionalStaysInBox) {
  const BoxDomain box(Eigen::Vector2d(-1, 0), Eigen::Vector2d(1, 3));
  const Kernel k(KernelFamily::gaussian, 2);
  const auto spec = ObjectiveSpec::make(ObjectiveKind::trace, k, grid_measure(box, {12}), box, 4);
  SearchConfig cfg;
  cfg.restarts = 3;
  cfg.max_iters = 3000;
  const auto r = optimize_points(spec, cfg);
  for (Eigen::Index j = 0; j < 4; ++j) EXPECT_TRUE(box.contains(r.points.row(j).transpose()));
  EXPECT_LE(r.objective_value, spec(equally_spaced(box, 4)));
}

TEST(OptimizePoints, RejectsBadConfig) {
  const auto spec = spec_1d(KernelFamily::gaussian, ObjectiveKind::trace, -3, 3, 20, 2);
  SearchConfig cfg;
  cfg.restarts = 0;
  EXPECT_THROW(optimize_points(spec, cfg), InvalidArgument);
}

TEST(GreedyExchange, AllCandidates) {
  const auto spec = spec_1d(KernelFamily::gaussian, ObjectiveKind::trace, -3, 3, 40, 4);
  const PointSet c = line({2, -1, 0.5, -2.5});
  const auto r = greedy_exchange(spec, c, 4);
  EXPECT_EQ(r.points, sorted_lex(c));
  EXPECT_EQ(r.history.size(), 1u);
  EXPECT_EQ(r.candidate_indices, (std::vector<Eigen::Index>{0, 1, 2, 3}));
}

TEST(GreedyExchange, MonotoneHistory) {
  const auto spec = spec_1d(KernelFamily::gaussian, ObjectiveKind::supnorm, -3, 3, 80, 3);
  const auto r = greedy_exchange(spec, candidates_1d(25, -3, 3), 3);
  for (std::size_t i = 1; i < r.history.size(); ++i)
    EXPECT_LE(r.history[i], r.history[i - 1] + 1e-12 * (1 + std::abs(r.history[i - 1])));
  EXPECT_DOUBLE_EQ(r.history.back(), r.objective_value);
}

TEST(GreedyExchange, MatchesBruteForceOnSmallProblems) {
  // symmetric problems: the reflected subset ties the brute-force optimum in exact arithmetic
  const auto mirrored = [](std::vector<Eigen::Index> idx, Eigen::Index c) {
    for (auto& i : idx) i = c - 1 - i;
    std::sort(idx.begin(), idx.end());
    return idx;
  };
  for (auto fam : {KernelFamily::gaussian, KernelFamily::exponential, KernelFamily::sinc}) {
    for (auto [c, n] : {std::pair<Eigen::Index, Eigen::Index>{8, 2}, {10, 3}}) {
      const auto spec = spec_1d(fam, ObjectiveKind::trace, -3, 3, 121, n);
      const PointSet cand = candidates_1d(c, -3, 3);
      const auto g = greedy_exchange(spec, cand, n);
      const auto b = brute_force(spec, cand, n);
      EXPECT_TRUE(g.candidate_indices == b.candidate_indices || g.candidate_indices == mirrored(b.candidate_indices, c));
      EXPECT_NEAR(g.objective_value, b.objective_value, 1e-12 * (1 + std::abs(b.objective_value)));
    }
  }
}

TEST(BruteForce, TiesGoToLowestIndexTuple) {
  const auto spec = spec_1d(KernelFamily::sinc, ObjectiveKind::trace, -3, 3, 121, 3);
  const auto b = brute_force(spec, candidates_1d(10, -3, 3), 3);
  // {2,4,6} and {3,5,7} are reflections of each other
  EXPECT_EQ(b.candidate_indices, (std::vector<Eigen::Index>{2, 4, 6}));
}

TEST(BruteForce, Examples) {
  const auto spec = spec_1d(KernelFamily::gaussian, ObjectiveKind::supnorm, -3, 3, 201, 1);
  const auto r = brute_force(spec, candidates_1d(7, -3, 3), 1);
  EXPECT_EQ(r.candidate_indices, (std::vector<Eigen::Index>{3}));
  EXPECT_NEAR(r.points(0, 0), 0.0, 1e-15);

  const auto tr = spec_1d(KernelFamily::exponential, ObjectiveKind::trace, -3, 3, 121, 2);
  const auto a = brute_force(tr, candidates_1d(8, -3, 3), 2);
  const auto b = brute_force(tr, candidates_1d(8, -3, 3), 2);
  EXPECT_EQ(a.starts_tried, 28);
  EXPECT_EQ(a.candidate_indices, b.candidate_indices);
  EXPECT_EQ(a.objective_value, b.objective_value);
}

TEST(BruteForce, BudgetAndShapeErrors) {
  const auto spec = spec_1d(KernelFamily::gaussian, ObjectiveKind::trace, -3, 3, 20, 10);
  EXPECT_THROW(brute_force(spec, candidates_1d(40, -3, 3), 10), InvalidArgument);
  EXPECT_THROW(brute_force(spec, candidates_1d(5, -3, 3), 10), InvalidArgument);
  EXPECT_THROW(greedy_exchange(spec, candidates_1d(5, -3, 3), 10), InvalidArgument);
}

TEST(BruteForce, DegenerateCandidatesFail) {
  const auto spec = spec_1d(KernelFamily::gaussian, ObjectiveKind::trace, -3, 3, 20, 2);
  try {
    brute_force(spec, line({5, 6, 7}), 2);
    FAIL() << "expected SearchFailed";
  } catch (const SearchFailed& e) {
    EXPECT_TRUE(is_penalty(e.best_penalty()));
  }
}
