#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <frbf/errors.hpp>
#include <frbf/specfun.hpp>

#include "oracles.hpp"

namespace {

using frbf::DerivativeKind;
using frbf::frac_deriv_monomial;
using oracle::relative_error;

TEST(Gamma, KnownValues) {
  EXPECT_DOUBLE_EQ(frbf::gamma(1.0), 1.0);
  EXPECT_NEAR(frbf::gamma(4.0), 6.0, 6.0 * 1e-15);
  EXPECT_LE(relative_error(frbf::gamma(0.5), 1.7724538509055160), 1e-15);
  EXPECT_LE(relative_error(frbf::gamma(-0.5), -2.0 * std::sqrt(std::numbers::pi)),
            1e-14);
}

TEST(Gamma, MatchesHighPrecisionOnPositiveAxis) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> log_x(std::log(1e-3), std::log(170.0));
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double x = std::exp(log_x(rng));
    const double ref = static_cast<double>(oracle::gamma(x));
    worst = std::max(worst, relative_error(frbf::gamma(x), ref));
  }
  EXPECT_LE(worst, 1e-13);
}

TEST(Gamma, MatchesHighPrecisionOnNegativeAxis) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> dist(-20.0, 0.0);
  for (int i = 0; i < 500; ++i) {
    const double x = dist(rng);
    if (std::abs(x - std::round(x)) < 1e-6) continue;
    const double ref = static_cast<double>(oracle::gamma(x));
    EXPECT_LE(relative_error(frbf::gamma(x), ref), 1e-12) << "x = " << x;
  }
}

TEST(Gamma, Recurrence) {
  for (double x = 0.1; x <= 50.0; x += 0.037) {
    EXPECT_LE(relative_error(frbf::gamma(x + 1.0), x * frbf::gamma(x)), 1e-12)
        << "x = " << x;
  }
}

TEST(Gamma, PolesThrow) {
  EXPECT_THROW(frbf::gamma(0.0), frbf::PoleError);
  EXPECT_THROW(frbf::gamma(-1.0), frbf::PoleError);
  EXPECT_THROW(frbf::gamma(-5.0), frbf::PoleError);
  EXPECT_TRUE(frbf::is_gamma_pole(-3.0));
  EXPECT_FALSE(frbf::is_gamma_pole(-2.5));
  EXPECT_FALSE(frbf::is_gamma_pole(1.0));
}

TEST(Gamma, OverflowThrows) {
  EXPECT_NO_THROW(frbf::gamma(171.0));
  EXPECT_THROW(frbf::gamma(172.0), frbf::OverflowError);
  EXPECT_THROW(frbf::gamma(std::nan("")), frbf::DomainError);
}

TEST(FracDeriv, IntegerDerivativeOfSquare) {
  const auto t = frac_deriv_monomial(2.0, 1.0, DerivativeKind::riemann_liouville);
  EXPECT_NEAR(t.coefficient, 2.0, 1e-14);
  EXPECT_NEAR(t.power, 1.0, 0.0);
}

TEST(FracDeriv, ZeroOrderIsIdentity) {
  const auto t = frac_deriv_monomial(5.22, 0.0, DerivativeKind::riemann_liouville);
  EXPECT_EQ(t.coefficient, 1.0);
  EXPECT_EQ(t.power, 5.22);
  for (double s : {0.3, 2.55, 7.91}) {
    const auto c = frac_deriv_monomial(s, 0.0, DerivativeKind::caputo);
    EXPECT_EQ(c, (frbf::MonomialTerm{1.0, s}));
  }
}

TEST(FracDeriv, HalfDerivativeOfLinear) {
  const auto t = frac_deriv_monomial(1.0, 0.5, DerivativeKind::riemann_liouville);
  EXPECT_LE(relative_error(t.coefficient, oracle::gamma_ratio(2.0, 1.5)), 1e-15);
  EXPECT_LE(relative_error(t.coefficient, 1.1283791670955126), 1e-15);
  EXPECT_DOUBLE_EQ(t.power, 0.5);
}

TEST(FracDeriv, FirstOrderMatchesClassical) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(1.0001, 12.0);
  for (int i = 0; i < 200; ++i) {
    const double s = dist(rng);
    const auto t = frac_deriv_monomial(s, 1.0, DerivativeKind::caputo);
    EXPECT_LE(relative_error(t.coefficient, s), 1e-12) << "s = " << s;
    EXPECT_DOUBLE_EQ(t.power, s - 1.0);
  }
}

TEST(FracDeriv, MatchesHighPrecisionOracle) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> s_dist(0.1, 9.0);
  std::uniform_real_distribution<double> a_dist(-2.0, 2.0);
  int checked = 0;
  while (checked < 100) {
    const double s = s_dist(rng);
    const double a = a_dist(rng);
    if (frbf::is_gamma_pole(s - a + 1.0)) continue;
    const auto t = frac_deriv_monomial(s, a, DerivativeKind::riemann_liouville);
    EXPECT_LE(relative_error(t.coefficient, oracle::gamma_ratio(s + 1.0, s - a + 1.0)),
              1e-11)
        << "s = " << s << ", alpha = " << a;
    ++checked;
  }
}

TEST(FracDeriv, Semigroup) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> s_dist(2.1, 8.0);
  std::uniform_real_distribution<double> a_dist(-0.95, 0.95);
  for (int i = 0; i < 200; ++i) {
    const double s = s_dist(rng);
    const double a1 = a_dist(rng);
    const double a2 = a_dist(rng);
    const auto first = frac_deriv_monomial(s, a1, DerivativeKind::riemann_liouville);
    const auto second =
        frac_deriv_monomial(first.power, a2, DerivativeKind::riemann_liouville);
    const auto both = frac_deriv_monomial(s, a1 + a2, DerivativeKind::riemann_liouville);
    EXPECT_LE(relative_error(first.coefficient * second.coefficient, both.coefficient),
              1e-10);
    EXPECT_NEAR(second.power, both.power, 1e-12);
  }
}

TEST(FracDeriv, CaputoAndRiemannLiouvilleAgreeOnAdmissiblePowers) {
  for (double s : {1.5, 2.25, 3.22, 6.55}) {
    for (double a : {-1.5, -0.3, 0.4, 1.2}) {
      if (!(s > std::ceil(a) - 1.0)) continue;
      EXPECT_EQ(frac_deriv_monomial(s, a, DerivativeKind::caputo),
                frac_deriv_monomial(s, a, DerivativeKind::riemann_liouville));
    }
  }
}

TEST(FracDeriv, Errors) {
  EXPECT_THROW(frac_deriv_monomial(-0.5, 0.5, DerivativeKind::riemann_liouville),
               frbf::DomainError);
  EXPECT_THROW(frac_deriv_monomial(0.5, 1.5, DerivativeKind::caputo),
               frbf::DomainError);
  EXPECT_THROW(frac_deriv_monomial(0.0, 0.5, DerivativeKind::caputo),
               frbf::DomainError);
  // Gamma(s - alpha + 1) = Gamma(0).
  EXPECT_THROW(frac_deriv_monomial(1.0, 2.0, DerivativeKind::riemann_liouville),
               frbf::PoleError);
  EXPECT_THROW(frac_deriv_monomial(2.0, 4.0, DerivativeKind::riemann_liouville),
               frbf::PoleError);
}

TEST(FracDeriv, ConstantUnderRiemannLiouville) {
  const auto t = frac_deriv_monomial(0.0, 0.5, DerivativeKind::riemann_liouville);
  EXPECT_LE(relative_error(t.coefficient, 1.0 / std::sqrt(std::numbers::pi)), 1e-15);
  EXPECT_DOUBLE_EQ(t.power, -0.5);
}

}  // namespace
