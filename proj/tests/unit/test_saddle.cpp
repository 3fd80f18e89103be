#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nk/fit.hpp"
#include "nk/kernel_exact.hpp"
#include "nk/saddle.hpp"
#include "oracles.hpp"

namespace {

using nk::SummandContext;
using cplx = std::complex<double>;

SummandContext ctx(double alpha, double delta, int n, cplx zeta) {
  SummandContext c;
  c.alpha = alpha;
  c.delta = delta;
  c.n = n;
  c.zeta = zeta;
  return c;
}

TEST(SummandContext, DerivedScales) {
  const SummandContext c = ctx(3.0, 0.4, 100, std::polar(0.5, 0.02));
  EXPECT_DOUBLE_EQ(c.alpha * c.gamma() + c.delta, 1.0);
  EXPECT_NEAR(c.theta(), 0.02 * 10, 1e-15);
  EXPECT_THROW(ctx(2, 0, 10, 1.0).validate(), nk::DomainError);
  EXPECT_THROW(ctx(2, 1, 0, 1.0).validate(), nk::DomainError);
}

TEST(GEval, AtOne) {
  const SummandContext c = ctx(3.0, 1.0, 50, cplx(0.2, 0.1));
  const cplx expected = std::pow(50.0, 2.0 / 3) * c.zeta / std::tgamma(2.0 / 3);
  EXPECT_LE(std::abs(nk::g_eval(1.0, c).value() - expected) / std::abs(expected), 1e-14);
}

TEST(GEval, GaussianAtThree) {
  const int n = 70;
  const nk::ScaledComplex v = nk::g_eval(3.0, ctx(2.0, 1.0, n, 1.0));
  EXPECT_LE(std::abs(v.value().real() - n * n * n / 2.0) / (n * n * n / 2.0), 1e-14);
}

TEST(GEval, ModulusDependsOnlyOnAbsZeta) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.1, 50);
  for (int i = 0; i < 200; ++i) {
    const cplx zeta = oracle::random_in_disc(rng, 2.0);
    const double x = u(rng);
    const SummandContext c = ctx(1.7, 0.8, 300, zeta);
    const SummandContext a = ctx(1.7, 0.8, 300, std::abs(zeta));
    EXPECT_NEAR(nk::g_eval(x, c).log_abs(), nk::g_eval(x, a).log_abs(), 1e-12);
  }
  EXPECT_THROW(nk::g_eval(0.0, ctx(2, 1, 10, 1.0)), nk::DomainError);
}

TEST(FindXstar, ResidualAndLocation) {
  const SummandContext c = ctx(2.0, 1.0, 1000, 1.0);
  const double x = nk::find_xstar(c);
  EXPECT_LT(std::abs(nk::xstar_residual(x, c)), 1e-12);
  // The maximizer of (N zeta)^x / Gamma(x) sits at N zeta + 1/2 - O(1/N).
  EXPECT_NEAR(x, 1000.5, 1e-3);
}

TEST(FindXstar, QuarterModulus) {
  const SummandContext c = ctx(2.0, 1.0, 1000, 0.25);
  const double x = nk::find_xstar(c);
  EXPECT_LT(std::abs(nk::xstar_residual(x, c)), 1e-12);
  EXPECT_NEAR(x, 250.5, 0.01);
  // Independent check of the stationarity condition with the multiprecision digamma.
  EXPECT_NEAR(std::log(1000 * 0.25) - static_cast<double>(oracle::digamma50(x)), 0.0, 1e-12);
}

TEST(FindXstar, LocalMaximum) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> a(0.7, 4.0);
  std::uniform_real_distribution<double> r(0.05, 1.0);
  for (int i = 0; i < 50; ++i) {
    const SummandContext c = ctx(a(rng), 1.0, 200 + 50 * i, r(rng));
    const double x = nk::find_xstar(c);
    const double top = nk::g_eval(x, c).log_abs();
    EXPECT_LT(nk::g_eval(x + 0.1, c).log_abs(), top);
    if (x > 0.1) EXPECT_LT(nk::g_eval(x - 0.1, c).log_abs(), top);
  }
}

TEST(FindXstar, GridMaximumInSameBin) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> a(1.0, 3.0);
  std::uniform_real_distribution<double> r(0.2, 0.9);
  std::uniform_int_distribution<int> nn(200, 3000);
  for (int trial = 0; trial < 20; ++trial) {
    const SummandContext c = ctx(a(rng), 1.0, nn(rng), r(rng));
    const double x = nk::find_xstar(c);
    // x* can sit beyond N when (alpha/2)|zeta|^(alpha/2) > 1.
    constexpr int kGrid = 3000;
    const double h = (3.0 * c.n - 1.0) / (kGrid - 1);
    int best = 0;
    double best_val = -INFINITY;
    for (int i = 0; i < kGrid; ++i) {
      const double v = nk::g_eval(1 + i * h, c).log_abs();
      if (v > best_val) {
        best_val = v;
        best = i;
      }
    }
    EXPECT_LE(std::abs(1 + best * h - x), h) << "trial " << trial;
  }
}

TEST(FindXstar, Errors) {
  EXPECT_THROW(nk::find_xstar(ctx(2, 1, 100, 1e-7)), nk::DomainError);
  // N^(2/alpha) |zeta| so large that psi(2x/alpha) cannot reach it below 10 N.
  EXPECT_THROW(nk::find_xstar(ctx(2, 1, 10, 1e6)), nk::NumericalError);
}

TEST(XstarAsymptotic, Substitution) {
  EXPECT_DOUBLE_EQ(nk::xstar_asymptotic(ctx(2, 1, 100, 1.0)), 100.5);
  EXPECT_DOUBLE_EQ(nk::xstar_asymptotic(ctx(4, 1, 200, 0.5)), 2 * 0.25 * 200 + 1);
}

TEST(XstarAsymptotic, DifferenceShrinksLikeOneOverN) {
  std::vector<double> ns, diffs;
  for (int n : {100, 200, 400, 800, 1600, 3200}) {
    const SummandContext c = ctx(2.0, 1.0, n, 0.5);
    const double d = std::abs(nk::find_xstar(c) - nk::xstar_asymptotic(c));
    EXPECT_LE(d, 1.0 / n) << n;
    ns.push_back(n);
    diffs.push_back(d);
  }
  EXPECT_NEAR(nk::loglog_slope(ns, diffs), -1.0, 0.1);
}

TEST(GmaxAsymptotic, RatioToTrueMaximum) {
  const SummandContext c = ctx(2.0, 1.0, 1000, 0.5);
  const double ratio = std::exp(nk::g_eval(nk::find_xstar(c), c).log_abs() - nk::gmax_asymptotic(c).log_abs());
  EXPECT_NEAR(ratio, 1.0, 5.0 / 1000);
}

TEST(GmaxAsymptotic, LogScale) {
  const SummandContext c = ctx(2.0, 1.0, 100, 1.0);
  EXPECT_NEAR(nk::gmax_asymptotic(c).log_abs(), 100 + std::log(10.0) - 0.5 * std::log(2 * std::numbers::pi), 1e-12);
  const SummandContext d = ctx(3.0, 0.7, 500, 0.3);
  const double expected = std::pow(0.3, 1.5) * std::pow(500, 0.7) + 0.35 * std::log(500.0) +
                          0.75 * std::log(0.3) - 0.5 * std::log(2 * std::numbers::pi);
  EXPECT_NEAR(nk::gmax_asymptotic(d).log_abs(), expected, 1e-12);
}

TEST(OffsetDecay, GaussianQuarterWindow) {
  const double l = std::log(400.0);
  EXPECT_NEAR(nk::log_offset_decay(ctx(2, 1, 400, 1.0)), -l * l / 2, 0.25 * l * l / 2);
}

TEST(OffsetDecay, BelowOneAndMonotone) {
  for (int n : {100, 400, 1600}) {
    const SummandContext c = ctx(2, 1, n, 0.8);
    const double one = nk::offset_decay(c, 1.0);
    EXPECT_LT(one, 1.0);
    EXPECT_LT(nk::offset_decay(c, 1.5), one);
  }
  EXPECT_THROW(nk::offset_decay(ctx(2, 1, 100, 0.1)), nk::DomainError);
}

TEST(SaddlePoint, Examples) {
  EXPECT_NEAR(std::abs(nk::saddle_point(1.0, 2.0) - cplx(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(nk::saddle_point(cplx(0, 1), 2.0) - cplx(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(nk::saddle_point(cplx(0, 1), 1.0) - 0.5 * std::polar(1.0, std::numbers::pi / 4)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(nk::saddle_point(cplx(0.3, 0.1), 3.0)), 1.5 * std::pow(std::abs(cplx(0.3, 0.1)), 1.5), 1e-15);
  EXPECT_THROW(nk::saddle_point(0.0, 2.0), nk::DomainError);
}

TEST(HEval, ZeroAtSaddleForRealZeta) {
  for (double alpha : {1.0, 2.0, 3.5}) {
    for (double r : {0.2, 1.0, 2.0}) {
      EXPECT_NEAR(std::abs(nk::h_eval(nk::saddle_point(r, alpha), r, alpha)), 0.0, 1e-14);
    }
  }
  const cplx zeta = std::polar(0.7, 0.3);
  const cplx expected = std::pow(zeta, 1.5) - std::pow(0.7, 1.5);
  EXPECT_NEAR(std::abs(nk::h_eval(nk::saddle_point(zeta, 3.0), zeta, 3.0) - expected), 0.0, 1e-14);
}

TEST(HEval, NegativeAwayFromMaximizer) {
  EXPECT_LT(nk::h_eval(1 / std::numbers::e, 1.0, 2.0).real(), 0.0);
  for (double y = 0.05; y < 5; y += 0.05) {
    if (std::abs(y - 1.0) < 1e-9) continue;
    EXPECT_LT(nk::h_eval(y, 1.0, 2.0).real(), 0.0) << y;
  }
  EXPECT_THROW(nk::h_eval(0.0, 1.0, 2.0), nk::DomainError);
}

TEST(HEval, SecondDerivativeAtSaddle) {
  for (double alpha : {1.0, 2.0, 3.0}) {
    const cplx zeta = std::polar(0.6, 0.2);
    const cplx eta = nk::saddle_point(zeta, alpha);
    const double h = 1e-4;
    const cplx fd = (nk::h_eval(eta + h, zeta, alpha) - 2.0 * nk::h_eval(eta, zeta, alpha) +
                     nk::h_eval(eta - h, zeta, alpha)) / (h * h);
    EXPECT_LE(std::abs(fd - (-2.0 / (alpha * eta))), 1e-6);
  }
}

TEST(SteepestDescent, MatchesDirectSum) {
  const SummandContext c = ctx(2.0, 1.0, 1600, 0.5);
  const cplx ratio = (nk::summand_sum(c) / nk::steepest_descent_sum(c)).value();
  EXPECT_LE(std::abs(ratio - 1.0), 0.05);
}

TEST(SteepestDescent, RealPositiveAndLogScale) {
  const SummandContext c = ctx(2.0, 1.0, 300, 0.7);
  const nk::ScaledComplex v = nk::steepest_descent_sum(c);
  EXPECT_EQ(v.arg(), 0.0);
  EXPECT_NEAR(v.log_abs(), 0.7 * 300 + std::log(300.0) + std::log(0.7), 1e-12);
}

TEST(SteepestDescent, SectorEnforced) {
  EXPECT_THROW(nk::steepest_descent_sum(ctx(2, 1, 100, 1.2)), nk::DomainError);
  EXPECT_THROW(nk::steepest_descent_sum(ctx(2, 1, 100, std::polar(0.5, 0.2))), nk::DomainError);
  EXPECT_NO_THROW(nk::steepest_descent_sum(ctx(2, 1, 100, std::polar(0.5, 0.05))));
}

TEST(SteepestDescent, ConsistentWithMaximum) {
  // |S| / (N^(delta/2) gmax sqrt(2 pi / |zeta|^(alpha/2)) |eta0|) -> 1
  for (double alpha : {1.0, 2.0, 3.0}) {
    const double zeta = 0.4;
    for (int n : {100, 1000, 10000}) {
      const SummandContext c = ctx(alpha, 1.0, n, zeta);
      const double log_ratio = nk::steepest_descent_sum(c).log_abs() -
                               (0.5 * std::log(n) + nk::gmax_asymptotic(c).log_abs() +
                                0.5 * std::log(2 * std::numbers::pi / std::pow(zeta, alpha / 2)) +
                                std::log(std::abs(nk::saddle_point(zeta, alpha))));
      EXPECT_NEAR(log_ratio, 0.0, 1e-12);
    }
  }
}

TEST(N0Gate, MaximizerInsideRange) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> a(1.0, 3.0);
  std::uniform_real_distribution<double> d(0.3, 0.9);
  std::uniform_real_distribution<double> r(0.3, 2.0);
  for (int i = 0; i < 40; ++i) {
    SummandContext c = ctx(a(rng), d(rng), 1, r(rng));
    const double n0 = nk::n0_threshold(c);
    if (n0 > 5e4) continue;
    c.n = static_cast<int>(std::ceil(n0 * (1 + 3 * std::uniform_real_distribution<double>(0, 1)(rng))));
    const double x = nk::find_xstar(c);
    EXPECT_GT(x, 0.0);
    EXPECT_LT(x, c.n);
  }
}

TEST(Pipeline, KernelEqualsPrefactorTimesSum) {
  // kernel(Z/N^gamma, W/N^gamma) = (alpha/2pi) exp(-(|Z|^alpha + |W|^alpha) N^delta / 2)
  //                                * N^(2 gamma) / (Z conj W) * S
  for (double alpha : {1.0, 2.0, 3.0}) {
    for (double delta : {0.5, 1.0}) {
      const int n = 250;
      const cplx z = std::polar(0.6, 0.1);
      const cplx w = std::polar(0.5, -0.05);
      const SummandContext c = ctx(alpha, delta, n, z * std::conj(w));
      const double shrink = std::pow(n, -c.gamma());
      const nk::ScaledComplex lhs = nk::kernel(z * shrink, w * shrink, {alpha, n});
      const double log_pref = std::log(alpha / (2 * std::numbers::pi)) -
                              0.5 * std::pow(n, delta) * (std::pow(0.6, alpha) + std::pow(0.5, alpha)) +
                              2 * c.gamma() * std::log(n);
      const nk::ScaledComplex rhs = nk::ScaledComplex::from_log_polar(log_pref, 0) *
                                    nk::summand_sum(c) / nk::ScaledComplex::from_complex(c.zeta);
      EXPECT_LE(std::abs((lhs / rhs).value() - 1.0), 1e-12) << alpha << ' ' << delta;
    }
  }
}

}  // namespace
