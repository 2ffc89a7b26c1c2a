#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "optsample/core.hpp"

using namespace optsample;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

PointSet line(std::initializer_list<double> v) { return vec(v); }

}  // namespace

TEST(Kernel, EvalExamples) {
  const Kernel g(KernelFamily::gaussian, 1), s(KernelFamily::sinc, 1), e(KernelFamily::exponential, 1);
  EXPECT_NEAR(eval(g, vec({0}), vec({1})), 0.3678794412, 1e-10);
  EXPECT_DOUBLE_EQ(eval(s, vec({2}), vec({2})), 1.0);
  EXPECT_NEAR(eval(e, vec({0}), vec({2})), 0.1353352832, 1e-10);
}

TEST(Kernel, DimensionMismatchThrows) {
  const Kernel g(KernelFamily::gaussian, 2);
  EXPECT_THROW(eval(g, vec({0}), vec({1, 2})), InvalidArgument);
  EXPECT_THROW(Kernel(KernelFamily::sinc, 0), InvalidArgument);
}

TEST(Kernel, SincSeriesNearZeroIsContinuous) {
  const Kernel s(KernelFamily::sinc, 1);
  const double t = 1e-7;
  EXPECT_NEAR(s(vec({t}), vec({0})), std::sin(M_PI * t) / (M_PI * t), 1e-15);
  EXPECT_NEAR(s(vec({0.5}), vec({0})), 2.0 / M_PI, 1e-15);
}

TEST(Kernel, SymmetryUnitDiagonalAndBounds) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (auto fam : {KernelFamily::gaussian, KernelFamily::sinc, KernelFamily::exponential}) {
    for (int d = 1; d <= 3; ++d) {
      const Kernel k(fam, d);
      for (int t = 0; t < 200; ++t) {
        Eigen::VectorXd x(d), y(d);
        for (int i = 0; i < d; ++i) x(i) = u(rng), y(i) = u(rng);
        EXPECT_EQ(k(x, y), k(y, x));
        EXPECT_NEAR(k(x, x), 1.0, 1e-15);
        EXPECT_LE(std::abs(k(x, y)), 1.0 + 1e-15);
      }
    }
  }
}

TEST(Gram, Examples) {
  const Kernel g(KernelFamily::gaussian, 1), s(KernelFamily::sinc, 1), e(KernelFamily::exponential, 1);
  const auto m = gram(g, line({0, 1}));
  EXPECT_DOUBLE_EQ(m(0, 0), 1.0);
  EXPECT_NEAR(m(0, 1), std::exp(-1.0), 1e-15);
  EXPECT_EQ(m(0, 1), m(1, 0));

  const auto id = gram(s, line({0, 1, 2}));
  EXPECT_LT((id - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-14);

  const auto row = gram(e, line({0}), line({0, 1, 2}));
  ASSERT_EQ(row.rows(), 1);
  EXPECT_NEAR(row(0, 1), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(row(0, 2), std::exp(-2.0), 1e-15);

  EXPECT_THROW(gram(g, PointSet(0, 1)), InvalidArgument);
}

TEST(Gram, SincIntegerGridIsIdentityIn2D) {
  const Kernel s(KernelFamily::sinc, 2);
  PointSet p(9, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p.row(i * 3 + j) << i - 1, j + 4;
  EXPECT_LT((gram(s, p) - Eigen::MatrixXd::Identity(9, 9)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Gram, PositiveSemidefiniteOnRandomPoints) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (auto fam : {KernelFamily::gaussian, KernelFamily::sinc, KernelFamily::exponential}) {
    const Kernel k(fam, 2);
    for (int t = 0; t < 20; ++t) {
      PointSet p(12, 2);
      for (Eigen::Index i = 0; i < p.size(); ++i) p.data()[i] = u(rng);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram(k, p));
      EXPECT_GE(es.eigenvalues().minCoeff(), -1e-10 * es.eigenvalues().maxCoeff());
    }
  }
}

TEST(GridMeasure, MidpointExamples) {
  const auto m1 = grid_measure(BoxDomain::cube(0, 1, 1), {2});
  EXPECT_DOUBLE_EQ(m1.nodes()(0, 0), 0.25);
  EXPECT_DOUBLE_EQ(m1.nodes()(1, 0), 0.75);
  EXPECT_DOUBLE_EQ(m1.weights()(0), 0.5);

  const auto m2 = grid_measure(BoxDomain::cube(-3, 3, 1), {3});
  EXPECT_DOUBLE_EQ(m2.nodes()(0, 0), -2.0);
  EXPECT_DOUBLE_EQ(m2.nodes()(1, 0), 0.0);
  EXPECT_DOUBLE_EQ(m2.nodes()(2, 0), 2.0);
  EXPECT_DOUBLE_EQ(m2.mass(), 6.0);

  const auto m3 = grid_measure(BoxDomain::cube(0, 1, 2), {2, 2});
  EXPECT_EQ(m3.size(), 4);
  for (Eigen::Index k = 0; k < 4; ++k) EXPECT_DOUBLE_EQ(m3.weights()(k), 0.25);

  EXPECT_THROW(grid_measure(BoxDomain::cube(0, 1, 1), {1}), InvalidArgument);
}

TEST(GridMeasure, MassIsVolume) {
  const BoxDomain box(vec({-2, 0.5}), vec({2, 3.0}));
  const auto m = grid_measure(box, {17, 5});
  EXPECT_NEAR(integrate(m, Eigen::VectorXd::Ones(m.size())), box.volume(), 1e-12);
  const auto m1 = grid_measure(BoxDomain::cube(-3, 3, 1), {201});
  EXPECT_NEAR(m1.mass(), 6.0, 1e-12);
}

TEST(DiscreteMeasure, UniformWeights) {
  const auto m = discrete_uniform_measure(line({0, 1}));
  EXPECT_DOUBLE_EQ(m.weights()(0), 0.5);
  PointSet thirty(30, 1);
  for (int i = 0; i < 30; ++i) thirty(i, 0) = -3.0 + 6.0 * i / 29.0;
  const auto m30 = discrete_uniform_measure(thirty);
  for (Eigen::Index k = 0; k < 30; ++k) EXPECT_DOUBLE_EQ(m30.weights()(k), 1.0 / 30.0);
  EXPECT_DOUBLE_EQ(discrete_uniform_measure(line({0})).weights()(0), 1.0);
  EXPECT_THROW(discrete_uniform_measure(line({0, 1, 0})), InvalidArgument);
}

TEST(Integrate, Examples) {
  EXPECT_DOUBLE_EQ(integrate(grid_measure(BoxDomain::cube(0, 1, 1), {2}), vec({1, 1})), 1.0);
  const auto m4 = grid_measure(BoxDomain::cube(0, 1, 1), {4});
  EXPECT_NEAR(integrate(m4, m4.nodes().col(0)), 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(integrate(discrete_uniform_measure(line({0, 1, 2})), vec({3, 6, 9})), 6.0);
  EXPECT_THROW(integrate(m4, vec({1, 2})), InvalidArgument);
}

TEST(Measure, RejectsBadWeights) {
  EXPECT_THROW(Measure(line({0, 1}), vec({1, 0})), InvalidArgument);
  EXPECT_THROW(Measure(line({0, 1}), vec({1})), InvalidArgument);
}

TEST(BoxDomain, InvariantsAndClamp) {
  EXPECT_THROW(BoxDomain(vec({0}), vec({0})), InvalidArgument);
  const BoxDomain box(vec({0, 2}), vec({1, 4}));
  EXPECT_NEAR(box.diameter(), std::sqrt(5.0), 1e-15);
  PointSet p(1, 2);
  p << -1, 5;
  box.clamp(p);
  EXPECT_EQ(p(0, 0), 0.0);
  EXPECT_EQ(p(0, 1), 4.0);
}

TEST(PointSetHelpers, SortAndSeparation) {
  PointSet p(3, 2);
  p << 1, 0, 0, 5, 0, 1;
  const auto s = sorted_lex(p);
  EXPECT_EQ(s(0, 1), 1.0);
  EXPECT_EQ(s(1, 1), 5.0);
  EXPECT_EQ(s(2, 0), 1.0);
  EXPECT_NEAR(min_separation(p), std::sqrt(2.0), 1e-15);
}
