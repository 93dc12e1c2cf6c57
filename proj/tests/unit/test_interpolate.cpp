#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <frbf/catalog.hpp>
#include <frbf/errors.hpp>
#include <frbf/interpolate.hpp>
#include <frbf/kernels.hpp>

#include "oracles.hpp"

namespace {

using frbf::MonomialSum;
using frbf::TailKind;
using frbf::TailSpec;

MonomialSum false_tps(double N, double b, double alpha = 0.0) {
  frbf::KernelSpec s;
  s.family = frbf::Family::false_tps;
  s.N = N;
  s.b = b;
  s.alpha = alpha;
  s.frac_mode = frbf::FracMode::exponent_shift;
  return frbf::build_kernel(s);
}

Eigen::MatrixXd random_points(int n, int d, double lo, double hi, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  Eigen::MatrixXd x(n, d);
  for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = dist(rng);
  return x;
}

TEST(TailBasis, MultivariateDegreeOne) {
  const TailSpec tail{TailKind::multivariate, 2, 2, 0.0};
  const auto basis = frbf::tail_basis(tail);
  ASSERT_EQ(basis.size(), 3u);
  EXPECT_EQ(tail.size(), 3);
  const Eigen::Vector2d x(0.3, -1.7);
  EXPECT_EQ(basis[0](x), 1.0);
  EXPECT_EQ(basis[1](x), 0.3);
  EXPECT_EQ(basis[2](x), -1.7);
}

TEST(TailBasis, MultivariateDegreeTwoCount) {
  const TailSpec tail{TailKind::multivariate, 3, 2, 0.0};
  EXPECT_EQ(frbf::tail_basis(tail).size(), 6u);
  EXPECT_EQ(tail.size(), 6);
  EXPECT_EQ((TailSpec{TailKind::multivariate, 5, 2, 0.0}).size(), 15);
  EXPECT_EQ((TailSpec{TailKind::multivariate, 3, 3, 0.0}).size(), 10);
}

TEST(TailBasis, Radial) {
  const TailSpec tail{TailKind::radial, 4, 2, 0.0};
  const auto basis = frbf::tail_basis(tail);
  ASSERT_EQ(basis.size(), 4u);
  const Eigen::Vector2d x(0.6, 0.8);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(basis[k](x), 1.0, 1e-15);
  const Eigen::Vector2d y(1.2, 1.6);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(basis[k](y), std::pow(2.0, k), 1e-13);

  const TailSpec offset{TailKind::radial, 3, 2, 0.5};
  const auto shifted = frbf::tail_basis(offset);
  EXPECT_NEAR(shifted[1](y), std::pow(2.0, 1.5), 1e-13);
  EXPECT_NEAR(shifted[2](y), std::pow(2.0, 2.5), 1e-13);
}

TEST(Assemble, SingleNodeWithoutTail) {
  const Eigen::MatrixXd c = Eigen::MatrixXd::Constant(1, 2, 0.5);
  const auto s = frbf::assemble_interpolation(c, false_tps(3.22, 1.0),
                                              TailSpec{TailKind::multivariate, 0, 2, 0.0},
                                              Eigen::VectorXd::Ones(1));
  ASSERT_EQ(s.A.rows(), 1);
  EXPECT_EQ(s.A(0, 0), 0.0);
  EXPECT_EQ(s.tail_size(), 0);
}

TEST(Assemble, BlockStructureAndSymmetry) {
  const Eigen::MatrixXd c = random_points(3, 2, 0.0, 1.0, 1);
  const auto s = frbf::assemble_interpolation(c, false_tps(3.22, 1.0),
                                              TailSpec{TailKind::multivariate, 2, 2, 0.0},
                                              Eigen::VectorXd::Ones(3));
  const Eigen::MatrixXd G = s.matrix();
  ASSERT_EQ(G.rows(), 6);
  ASSERT_EQ(G.cols(), 6);
  EXPECT_EQ(G.bottomRightCorner(3, 3), Eigen::MatrixXd::Zero(3, 3));
  EXPECT_EQ(G, G.transpose());
  EXPECT_EQ(s.A.diagonal(), Eigen::VectorXd::Zero(3));
  EXPECT_EQ(s.rhs.size(), 6);
  EXPECT_EQ(s.rhs.tail(3), Eigen::VectorXd::Zero(3));
}

TEST(Solve, ZeroDataGivesZeroWeights) {
  const Eigen::MatrixXd c = random_points(25, 2, 0.0, 1.0, 2);
  const auto s = frbf::assemble_interpolation(c, false_tps(3.22, 1.0),
                                              TailSpec{TailKind::multivariate, 3, 2, 0.0},
                                              Eigen::VectorXd::Zero(25));
  const auto r = frbf::solve_system(s);
  EXPECT_EQ(r.lambda.norm(), 0.0);
  EXPECT_EQ(r.beta.norm(), 0.0);
}

TEST(Solve, TwoNodesInOneDimensionMatchesHandElimination) {
  frbf::KernelSpec spec;
  spec.family = frbf::Family::two_term;
  spec.N = 2.5;
  spec.b = 1.0;
  const MonomialSum k = frbf::build_kernel(spec);
  Eigen::MatrixXd c(2, 1);
  c << 0.2, 0.7;
  const Eigen::Vector2d u(1.3, -0.4);
  const TailSpec tail{TailKind::multivariate, 1, 1, 0.0};

  const double phi = std::pow(0.5, 3.5) - std::pow(0.5, 2.5);
  const auto ref = oracle::solve3({{{0.0, phi, 1.0}, {phi, 0.0, 1.0}, {1.0, 1.0, 0.0}}},
                                  {u(0), u(1), 0.0});
  frbf::SolveResult r;
  const auto s = frbf::fit_interpolant(c, k, tail, u, {}, &r);
  EXPECT_NEAR(r.lambda(0), ref[0], 1e-12 * std::abs(ref[0]));
  EXPECT_NEAR(r.lambda(1), ref[1], 1e-12 * std::abs(ref[1]));
  EXPECT_NEAR(r.beta(0), ref[2], 1e-12 * std::max(1.0, std::abs(ref[2])));
  EXPECT_NEAR(frbf::evaluate_interpolant(s, c.row(0).transpose()), u(0), 1e-10);
  EXPECT_NEAR(frbf::evaluate_interpolant(s, c.row(1).transpose()), u(1), 1e-10);
}

TEST(Solve, PreconditionedMatchesDirect) {
  const Eigen::MatrixXd c = random_points(20, 2, 0.0, 1.0, 3);
  const Eigen::VectorXd u = Eigen::VectorXd::NullaryExpr(20, [&](Eigen::Index i) {
    return std::sin(3 * c(i, 0)) + c(i, 1);
  });
  const auto s = frbf::assemble_interpolation(c, false_tps(3.22, 1.0),
                                              TailSpec{TailKind::multivariate, 3, 2, 0.0}, u);
  const auto direct = frbf::solve_system(s);
  const auto pre = frbf::solve_system(s, frbf::PrecondConfig{});
  ASSERT_TRUE(pre.precond.has_value());
  EXPECT_LE(pre.precond->cond_after, 10.0);
  const Eigen::Index n = direct.lambda.size() + direct.beta.size();
  Eigen::VectorXd a(n), b(n);
  a << direct.lambda, direct.beta;
  b << pre.lambda, pre.beta;
  EXPECT_LE((a - b).norm() / a.norm(), 1e-6);
  EXPECT_LE(pre.relative_residual, 1e-8);
}

TEST(Solve, CollinearCentersAreNotUnisolvent) {
  Eigen::MatrixXd c(6, 2);
  for (int i = 0; i < 6; ++i) c.row(i) << 0.1 * (i + 1), 0.1 * (i + 1);
  const auto s = frbf::assemble_interpolation(c, false_tps(3.22, 1.0),
                                              TailSpec{TailKind::multivariate, 3, 2, 0.0},
                                              Eigen::VectorXd::Ones(6));
  EXPECT_THROW(frbf::solve_system(s), frbf::SingularSystemError);
}

TEST(Evaluate, ConstantTailOnly) {
  frbf::Interpolant s;
  s.centers = random_points(4, 2, 0.0, 1.0, 4);
  s.lambda = Eigen::VectorXd::Zero(4);
  s.tail = TailSpec{TailKind::multivariate, 2, 2, 0.0};
  s.basis = frbf::tail_basis(s.tail);
  s.beta = Eigen::Vector3d(2.75, 0.0, 0.0);
  s.kernel = false_tps(3.22, 1.0);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(frbf::evaluate_interpolant(s, Eigen::Vector2d(0.1 * i, 1.0 - 0.07 * i)), 2.75);
  }
}

TEST(Evaluate, TestFunctionValue) {
  const auto& u = frbf::find_problem("sin8-interp").g;
  const double expected = (std::sin(8 * 1.56) + std::cos(8 * 0.20) + 4.0) / 35.0;
  EXPECT_NEAR(u(Eigen::Vector2d(0.88, 0.68)), expected, 1e-15);
}

TEST(Rmse, Examples) {
  const std::vector<double> a{1.0, 2.0, 3.0};
  EXPECT_EQ(frbf::rmse(a, a), 0.0);
  const std::vector<double> one{1.0}, zero{0.0};
  EXPECT_EQ(frbf::rmse(one, zero), 1.0);
  const std::vector<double> truth{3.0, 4.0}, approx{0.0, 0.0};
  EXPECT_NEAR(frbf::rmse(truth, approx), 3.5355339059327378, 1e-15);
  EXPECT_THROW(frbf::rmse(a, one), frbf::LengthMismatchError);
}

struct RandomConfig {
  Eigen::MatrixXd centers;
  MonomialSum kernel;
  TailSpec tail;
};

RandomConfig random_config(unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> N_dist(2.05, 4.95);
  std::uniform_int_distribution<int> n_dist(15, 40);
  double N = N_dist(rng);
  while (std::abs(N - std::round(N)) < 0.05) N = N_dist(rng);
  RandomConfig c;
  c.centers = random_points(n_dist(rng), 2, 0.28, 1.48, seed + 100);
  c.kernel = false_tps(N, 1.48);
  c.tail = TailSpec{TailKind::multivariate, frbf::cpd_order(c.kernel), 2, 0.0};
  return c;
}

TEST(Properties, ReproducesTailFunctions) {
  for (unsigned seed = 0; seed < 10; ++seed) {
    const RandomConfig c = random_config(seed);
    const Eigen::VectorXd u = (c.centers.col(0) + c.centers.col(1)).array() + 0.5;
    frbf::SolveResult r;
    const auto s = frbf::fit_interpolant(c.centers, c.kernel, c.tail, u, {}, &r);
    EXPECT_LE(r.lambda.cwiseAbs().maxCoeff(), 1e-7);
    const Eigen::MatrixXd x = random_points(100, 2, 0.28, 1.48, seed + 200);
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      EXPECT_NEAR(frbf::evaluate_interpolant(s, x.row(i).transpose()),
                  x(i, 0) + x(i, 1) + 0.5, 1e-8);
    }
  }
}

TEST(Properties, MomentsInterpolationAndPermutation) {
  for (unsigned seed = 10; seed < 20; ++seed) {
    const RandomConfig c = random_config(seed);
    const Eigen::VectorXd u = Eigen::VectorXd::NullaryExpr(c.centers.rows(), [&](Eigen::Index i) {
      return std::cos(4 * c.centers(i, 0)) * c.centers(i, 1);
    });
    const auto sys = frbf::assemble_interpolation(c.centers, c.kernel, c.tail, u);
    const auto r = frbf::solve_system(sys);
    EXPECT_LE((sys.P.transpose() * r.lambda).cwiseAbs().maxCoeff(), 1e-8);

    const auto s = frbf::fit_interpolant(c.centers, c.kernel, c.tail, u);
    EXPECT_LE(frbf::rmse(u, frbf::evaluate_interpolant_rows(s, c.centers)), 1e-8);

    std::vector<Eigen::Index> perm(static_cast<std::size_t>(c.centers.rows()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), std::mt19937_64(seed));
    Eigen::MatrixXd pc(c.centers.rows(), 2);
    Eigen::VectorXd pu(u.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      pc.row(static_cast<Eigen::Index>(i)) = c.centers.row(perm[i]);
      pu(static_cast<Eigen::Index>(i)) = u(perm[i]);
    }
    const auto ps = frbf::fit_interpolant(pc, c.kernel, c.tail, pu);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      EXPECT_NEAR(ps.lambda(static_cast<Eigen::Index>(i)), s.lambda(perm[i]),
                  1e-10 * s.lambda.cwiseAbs().maxCoeff());
    }
    const Eigen::MatrixXd x = random_points(50, 2, 0.28, 1.48, seed + 300);
    EXPECT_LE((frbf::evaluate_interpolant_rows(s, x) - frbf::evaluate_interpolant_rows(ps, x))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-10);
  }
}

}  // namespace
