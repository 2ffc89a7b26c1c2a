#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "optsample/objective.hpp"

using namespace optsample;

namespace {

PointSet line(std::initializer_list<double> v) {
  PointSet p(static_cast<Eigen::Index>(v.size()), 1);
  Eigen::Index i = 0;
  for (double x : v) p(i++, 0) = x;
  return p;
}

PointSet random_points(std::mt19937_64& rng, Eigen::Index n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  PointSet p(n, 1);
  for (Eigen::Index i = 0; i < n; ++i) p(i, 0) = u(rng);
  return p;
}

PointSet equispaced_nodes(Eigen::Index m, double lo, double hi) {
  PointSet p(m, 1);
  for (Eigen::Index i = 0; i < m; ++i) p(i, 0) = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(m - 1);
  return p;
}

const Kernel kGauss(KernelFamily::gaussian, 1);
const Kernel kSinc(KernelFamily::sinc, 1);

}  // namespace

TEST(TraceObjective, Examples) {
  const PointSet y = line({-1, 0.2, 1.5});
  EXPECT_NEAR(trace_objective(kGauss, discrete_uniform_measure(y), y), 1.0, 1e-12);
  const double t = 0.4, yy = -0.3;
  EXPECT_NEAR(trace_objective(kGauss, discrete_uniform_measure(line({yy})), line({t})),
              std::pow(std::exp(-(t - yy) * (t - yy)), 2), 1e-15);
  EXPECT_NEAR(trace_objective(kGauss, discrete_uniform_measure(line({yy})), line({yy})), 1.0, 1e-15);
}

TEST(TraceObjective, PermutationInvariant) {
  const Measure m = grid_measure(BoxDomain::cube(-3, 3, 1), {60});
  const PointSet a = line({-2, 0.5, 1.7});
  const PointSet b = line({1.7, -2, 0.5});
  EXPECT_DOUBLE_EQ(trace_objective(kGauss, m, a), trace_objective(kGauss, m, b));
  EXPECT_DOUBLE_EQ(supnorm_objective(kGauss, m, a), supnorm_objective(kGauss, m, b));
  const auto full = kl_full_basis(kGauss, discrete_uniform_measure(equispaced_nodes(10, -3, 3)));
  EXPECT_NEAR(trace_objective_spectral(full, kGauss, a), trace_objective_spectral(full, kGauss, b), 1e-13);
  const auto top = kl_eigenbasis(kGauss, m, 3);
  EXPECT_NEAR(subspace_objective(top, kGauss, a), subspace_objective(top, kGauss, b), 1e-12);
}

TEST(TraceObjective, BoundsAndMonotone) {
  std::mt19937_64 rng(2);
  const Measure m = grid_measure(BoxDomain::cube(-3, 3, 1), {60});
  const double komega = k_omega(kGauss, m);
  for (int t = 0; t < 50; ++t) {
    const PointSet x = random_points(rng, 4, -3, 3);
    if (min_separation(x) < 0.05) continue;
    PointSet more(5, 1);
    more << x, random_points(rng, 1, -3, 3);
    if (min_separation(more) < 0.05) continue;
    const double tx = trace_objective(kGauss, m, x);
    EXPECT_GE(tx, -1e-12);
    EXPECT_LE(tx, komega + 1e-12);
    EXPECT_GE(trace_objective(kGauss, m, more), tx - 1e-10);
    EXPECT_LE(supnorm_objective(kGauss, m, more), supnorm_objective(kGauss, m, x) + 1e-10);
  }
}

TEST(TraceObjectiveSpectral, AgreesWithFullBasis) {
  std::mt19937_64 rng(6);
  const Measure m = discrete_uniform_measure(equispaced_nodes(10, -3, 3));
  const auto full = kl_full_basis(kGauss, m);
  const auto truncated = kl_eigenbasis(kGauss, m, 3);
  for (int t = 0; t < 100; ++t) {
    const PointSet x = random_points(rng, 3, -3, 3);
    if (min_separation(x) < 1e-3) continue;
    const double direct = trace_objective(kGauss, m, x);
    EXPECT_NEAR(direct, trace_objective_spectral(full, kGauss, x), 1e-9);
    EXPECT_LE(trace_objective_spectral(truncated, kGauss, x), direct + 1e-12);
  }
}

TEST(SubspaceObjective, Examples) {
  const PointSet y = line({0, 1});
  const auto b = kl_eigenbasis(kGauss, discrete_uniform_measure(y), 2);
  EXPECT_NEAR(subspace_objective(b, kGauss, y), 1.0, 1e-10);
  const auto sb = kl_eigenbasis(kSinc, discrete_uniform_measure(line({0, 1})), 2);
  EXPECT_TRUE(std::isinf(subspace_objective(sb, kSinc, line({0, 9}))));
}

TEST(SubspaceObjective, AtLeastOne) {
  std::mt19937_64 rng(7);
  const Measure m = grid_measure(BoxDomain::cube(-3, 3, 1), {40});
  for (Eigen::Index n = 2; n <= 4; ++n) {
    const auto b = kl_eigenbasis(kGauss, m, n);
    for (int t = 0; t < 30; ++t) {
      const PointSet x = random_points(rng, n, -3, 3);
      if (min_separation(x) < 0.05) continue;
      EXPECT_GE(subspace_objective(b, kGauss, x), 1 - 1e-10);
    }
  }
}

TEST(SupnormObjective, Examples) {
  const Measure m = discrete_uniform_measure(line({-1, 1}));
  EXPECT_LT(supnorm_objective(kGauss, m, line({-1, 1})), 1e-7);
  EXPECT_NEAR(supnorm_objective(kGauss, m, line({0})), std::sqrt(1 - std::exp(-2.0)), 1e-14);
}

TEST(ObjectiveSpec, MinimizeConventionAndPenalties) {
  const BoxDomain box = BoxDomain::cube(-3, 3, 1);
  const Measure m = grid_measure(box, {60});
  const auto trace = ObjectiveSpec::make(ObjectiveKind::trace, kGauss, m, box, 2);
  const PointSet x = line({-1, 1});
  EXPECT_DOUBLE_EQ(trace(x), -trace_objective(kGauss, m, x));
  EXPECT_DOUBLE_EQ(trace.natural(x), trace_objective(kGauss, m, x));
  EXPECT_DOUBLE_EQ(trace.delta_sep(), 6e-6);

  const double coincide = trace(line({0.5, 0.5}));
  EXPECT_TRUE(is_penalty(coincide));
  EXPECT_NEAR(coincide, 1e6 * (1 + 6e-6), 1e-3);
  EXPECT_NEAR(trace(line({-1, 3.5})), 1e6 * 1.5, 1e-6);
  EXPECT_TRUE(is_penalty(trace(line({-1, std::nan("")}))));
  EXPECT_FALSE(is_penalty(trace(x)));
  EXPECT_THROW(trace(line({1})), InvalidArgument);

  const auto sub = ObjectiveSpec::make(ObjectiveKind::subspace, kSinc, discrete_uniform_measure(line({0, 1})),
                                       BoxDomain::cube(-10, 10, 1), 2);
  EXPECT_TRUE(is_penalty(sub(line({0, 9}))));
  EXPECT_FALSE(is_penalty(sub(line({0, 1}))));
}

TEST(ObjectiveSpec, IllConditionedGramIsPenalized) {
  const BoxDomain box = BoxDomain::cube(-3, 3, 1);
  const Measure m = grid_measure(box, {60});
  const auto trace = ObjectiveSpec::make(ObjectiveKind::trace, kGauss, m, box, 2, /*delta_sep=*/0.0);
  // gaussian pair at distance d: lambda_min ~ d^2, lambda_max ~ 2
  EXPECT_FALSE(is_penalty(trace(line({0, 1e-5}))));
  const double near = trace(line({0, 1e-6}));
  const double nearer = trace(line({0, 1e-7}));
  EXPECT_TRUE(is_penalty(near));
  EXPECT_TRUE(is_penalty(nearer));
  EXPECT_LT(near, nearer);
  EXPECT_NEAR(nearer, 1e6 * (1 + std::log10(2e-12 / 1e-14)), 2e4);
  const double ok = trace(line({0, 1e-5}));
  EXPECT_GE(-ok, -1e-9);
  EXPECT_LE(-ok, k_omega(kGauss, m));
}

TEST(ObjectiveSpec, Validation) {
  const BoxDomain box = BoxDomain::cube(-3, 3, 1);
  const Measure m = grid_measure(box, {20});
  EXPECT_THROW(ObjectiveSpec(ObjectiveKind::subspace, kGauss, m, box, 2), InvalidArgument);
  EXPECT_THROW(ObjectiveSpec(ObjectiveKind::trace, kGauss, m, box, 2, kl_eigenbasis(kGauss, m, 2)), InvalidArgument);
  EXPECT_THROW(ObjectiveSpec(ObjectiveKind::subspace, kGauss, m, box, 3, kl_eigenbasis(kGauss, m, 2)), InvalidArgument);
  EXPECT_THROW(ObjectiveSpec(ObjectiveKind::trace, Kernel(KernelFamily::gaussian, 2), m, box, 2), InvalidArgument);
  EXPECT_EQ(parse_objective_kind("supnorm"), ObjectiveKind::supnorm);
  EXPECT_EQ(to_string(ObjectiveKind::trace_spectral), "trace_spectral");
  EXPECT_THROW(parse_objective_kind("energy"), InvalidArgument);
}
