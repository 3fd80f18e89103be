#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "nk/kernel_exact.hpp"
#include "nk/taylor_a2.hpp"
#include "oracles.hpp"

namespace {

using cplx = std::complex<double>;
using cld = std::complex<long double>;
constexpr double kPi = std::numbers::pi;

// Smallest root of K exp(1 - (1 - a) K cos(tau/2)) = 1, by plain bisection
// on the log form over a fine grid.
double sector_oracle(double a, double tau) {
  const double c = (1 - a) * std::cos(tau / 2);
  auto f = [&](double k) { return std::log(k) + 1 - c * k; };
  double lo = 1e-6;
  double hi = lo;
  while (f(hi) < 0) {
    lo = hi;
    hi += 1e-3;
    if (hi > 1e4) return NAN;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

TEST(TruncatedExp, SingleTerm) {
  const cplx z(0.3, -0.7);
  EXPECT_LE(std::abs(nk::truncated_exp(z, 1).value() - 1.0 * z), 1e-15);
  EXPECT_LE(std::abs(nk::truncated_exp(z, 1).value() - z) / std::abs(z), 1e-15);
}

TEST(TruncatedExp, ZeroArgument) {
  EXPECT_TRUE(nk::truncated_exp(0.0, 7).is_zero());
}

TEST(TruncatedExp, NaiveSum) {
  const int n = 50;
  const double x = n * 0.2;
  double term = x;
  double sum = x;
  for (int k = 1; k < n; ++k) {
    term *= x / k;
    sum += term;
  }
  const cplx got = nk::truncated_exp(0.2, n).value();
  EXPECT_LE(std::abs(got - sum) / sum, 1e-12);
}

TEST(TruncatedExp, ComplexMatchesOracle) {
  for (int n : {3, 20, 200}) {
    for (cplx z : {cplx(0.4, 0.3), cplx(-0.5, 0.9), cplx(1.3, -0.2)}) {
      const cld x = cld(z) * static_cast<long double>(n);
      const cld ref = x * oracle::truncated_exponential(x, n);
      // Measured against the sum of term moduli: for arguments off the
      // positive axis the sum cancels and neither side keeps relative digits.
      const long double ax = std::abs(x);
      const long double scale = ax * std::abs(oracle::truncated_exponential(ax, n));
      const nk::ScaledComplex got = nk::truncated_exp(z, n);
      EXPECT_LE(oracle::scaled_diff(got, ref, scale), 1e-12) << n << " " << z;
    }
  }
}

TEST(RemainderError, ZeroIsDomainError) {
  EXPECT_THROW(nk::remainder_error(0.0, 10), nk::DomainError);
}

TEST(RemainderError, LargeArgumentTendsToMinusOne) {
  for (int n : {10, 50}) {
    for (cplx z : {cplx(5, 0), cplx(20, 3), cplx(50, -10)}) {
      const cplx e = nk::remainder_error(z, n);
      EXPECT_NEAR(std::abs(e), 1.0, 1e-3) << n << " " << z;
    }
  }
}

TEST(RemainderError, DirectRatioOracle) {
  // Away from the tiny-error regime the plain ratio is accurate enough.
  for (int n : {5, 30, 100}) {
    for (cplx z : {cplx(0.9, 0.1), cplx(1.5, 0), cplx(1.2, 0.8)}) {
      const cld x = cld(z) * static_cast<long double>(n);
      const cld ratio = oracle::truncated_exponential(x, n) / std::exp(x) - 1.0L;
      const cplx got = nk::remainder_error(z, n);
      if (std::abs(ratio) < 1e-6L) continue;
      EXPECT_LE(std::abs(cld(got) - ratio) / std::abs(ratio), 1e-9) << n << " " << z;
    }
  }
}

TEST(RemainderError, TailSeriesOracle) {
  // For small zeta the error is minus the Poisson tail P(X >= N), X ~ Poisson(N zeta).
  for (int n : {10, 40}) {
    for (double z : {0.05, 0.2, 0.5}) {
      const long double lam = static_cast<long double>(n) * z;
      long double term = std::exp(-lam);
      long double head = 0;
      for (int k = 0; k < n; ++k) {
        head += term;
        term *= lam / (k + 1);
      }
      // Tail summed directly for relative accuracy.
      long double tail = 0;
      long double t = std::exp(-lam + n * std::log(lam) - std::lgamma(n + 1.0L));
      for (int k = n; k < n + 400; ++k) {
        tail += t;
        t *= lam / (k + 1);
      }
      const cplx got = nk::remainder_error(z, n);
      EXPECT_LE(std::abs(static_cast<long double>(got.real()) + tail) / tail, 1e-12)
          << n << " " << z;
      EXPECT_EQ(got.imag(), 0.0);
      EXPECT_NEAR(static_cast<double>(head + tail), 1.0, 1e-15);
    }
  }
}

TEST(RemainderError, KernelConsistency) {
  const int n = 60;
  for (auto [z, w] : {std::pair{cplx(0.3, 0.2), cplx(0.5, -0.1)},
                      std::pair{cplx(-0.8, 0.1), cplx(-0.6, 0.4)},
                      std::pair{cplx(1.1, 0.0), cplx(0.9, 0.2)}}) {
    const cplx zw = z * std::conj(w);
    nk::ScaledComplex lhs = nk::truncated_exp(zw, n);
    lhs /= nk::ScaledComplex::from_complex(zw * static_cast<double>(n));
    lhs *= nk::ScaledComplex::from_log_polar(
        std::log(n / kPi) - 0.5 * n * (std::norm(z) + std::norm(w)), 0.0);
    const nk::ScaledComplex rhs = nk::kernel(z, w, {2.0, n});
    EXPECT_LE(std::abs((lhs / rhs).value() - 1.0), 1e-12) << z << " " << w;
  }
}

TEST(SectorRadius, DegenerateLimit) {
  for (double tau : {0.0, kPi / 2, kPi, 2 * kPi}) {
    EXPECT_NEAR(nk::sector_radius(0.999, tau), std::exp(-1.0), 1e-3) << tau;
  }
}

TEST(SectorRadius, HalfAtZeroMatchesOracle) {
  const double k = nk::sector_radius(0.5, 0.0);
  EXPECT_NEAR(k, sector_oracle(0.5, 0.0), 1e-10);
  EXPECT_NEAR(k * std::exp(1 - k / 2), 1.0, 1e-12);
  RecordProperty("K_half_0", std::to_string(k));
}

TEST(SectorRadius, ResidualOnGrid) {
  for (double a : {0.5, 0.125, 0.0625, 0.9}) {
    for (int i = 0; i <= 40; ++i) {
      const double tau = 2 * kPi * i / 40;
      const double k = nk::sector_radius(a, tau);
      const double lhs = k * std::exp(1 - (1 - a) * k * std::cos(tau / 2));
      EXPECT_LT(std::abs(lhs - 1), 1e-12) << a << " " << tau;
      EXPECT_NEAR(k, sector_oracle(a, tau), 1e-9) << a << " " << tau;
    }
  }
}

TEST(SectorRadius, NonIncreasingInAngle) {
  double prev = nk::sector_radius(0.5, 0.0);
  for (int i = 1; i <= 100; ++i) {
    const double k = nk::sector_radius(0.5, kPi * i / 100);
    EXPECT_LE(k, prev + 1e-12);
    prev = k;
  }
}

TEST(SectorRadius, CurvesAreContinuous) {
  for (double a : {0.5, 0.125, 0.0625}) {
    double prev = nk::sector_radius(a, 0.0);
    for (int i = 1; i <= 400; ++i) {
      const double k = nk::sector_radius(a, 2 * kPi * i / 400);
      ASSERT_TRUE(std::isfinite(k));
      EXPECT_LT(std::abs(k - prev), 0.05) << a << " " << i;
      prev = k;
    }
  }
}

TEST(SectorRadius, Errors) {
  EXPECT_THROW(nk::sector_radius(0.0, 1.0), nk::DomainError);
  EXPECT_THROW(nk::sector_radius(1.0, 1.0), nk::DomainError);
  EXPECT_THROW(nk::sector_radius(0.5, -0.1), nk::DomainError);
  EXPECT_THROW(nk::sector_radius(0.5, 7.0), nk::DomainError);
}

TEST(RemainderError, WideSectorSupDecreases) {
  // sup of |E_N| over a polar grid of the sector S(tau, 0.95 K(a, tau)).
  // Values below 1e-300 are at the representable floor and compare equal.
  const double a = 0.5;
  const double tau = kPi / 2;
  const double radius = 0.95 * nk::sector_radius(a, tau);
  double prev = INFINITY;
  for (int n : {100, 400, 1600}) {
    double sup = 0;
    for (int i = 1; i <= 20; ++i) {
      for (int j = -10; j <= 10; ++j) {
        const cplx z = std::polar(radius * i / 20, tau / 2 * j / 10);
        sup = std::max(sup, std::abs(nk::remainder_error(z, n)));
      }
    }
    EXPECT_LE(sup, std::max(prev, 1e-300)) << n;
    prev = sup;
  }
}

}  // namespace
