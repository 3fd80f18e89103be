#include "nk/taylor_a2.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "nk/specfun.hpp"

namespace nk {
namespace {

using cld = std::complex<long double>;

double radius_equation(double k, double a, double tau) {
  return k * std::exp(1 - (1 - a) * k * std::cos(tau / 2)) - 1;
}

}  // namespace

ScaledComplex truncated_exp(std::complex<double> zeta, int n) {
  if (n < 1) throw DomainError("truncated_exp: n must be >= 1");
  if (zeta == std::complex<double>{}) return {};
  const long double log_nz = std::log(static_cast<long double>(n) * std::abs(cld(zeta)));
  const long double arg = std::arg(cld(zeta));
  std::vector<LogTermL> terms(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    terms[k - 1] = {k * log_nz - log_gamma(static_cast<long double>(k)), k * arg};
  }
  return scaled_sum(std::span<const LogTermL>(terms));
}

std::complex<double> remainder_error(std::complex<double> zeta, int n) {
  if (n < 1) throw DomainError("remainder_error: n must be >= 1");
  if (zeta == std::complex<double>{}) throw DomainError("remainder_error: zeta = 0");
  const cld w = static_cast<long double>(n) * cld(zeta);

  if (std::abs(zeta) >= 1.0) {
    const ScaledComplex f = ScaledComplex::from_log_polar(std::log(std::abs(w)) + w.real(),
                                                          std::arg(w) + w.imag());
    return (truncated_exp(zeta, n) / f).value() - 1.0;
  }

  // Tail sum_{k>=N} w^k / k! = w^N / N! * (1 + w/(N+1) + w^2/((N+1)(N+2)) + ...).
  cld tail = 1;
  cld term = 1;
  const long limit = 100000L + 100L * n;
  for (long m = 1; m < limit; ++m) {
    term *= w / static_cast<long double>(n + m);
    tail += term;
    if (std::abs(term) < 1e-21L * std::abs(tail)) break;
  }
  const long double log_lead = n * std::log(std::abs(w)) - log_gamma(n + 1.0L) - w.real();
  const long double phase = n * std::arg(w) - w.imag();
  const ScaledComplex e = -(ScaledComplex::from_log_polar(log_lead, phase) * ScaledComplex(0, tail));
  return e.value();
}

double sector_radius(double a, double tau) {
  if (!(a > 0 && a < 1)) throw DomainError("sector_radius: a must lie in (0, 1)");
  if (!(tau >= 0 && tau <= 2 * std::numbers::pi)) {
    throw DomainError("sector_radius: tau must lie in [0, 2 pi]");
  }
  constexpr double step = 0.01;
  constexpr double limit = 1e4;
  double lo = 1e-12;
  double hi = step;
  while (radius_equation(hi, a, tau) < 0) {
    lo = hi;
    hi += step;
    if (hi > limit) throw NumericalError("sector_radius: no sign change found");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (radius_equation(mid, a, tau) < 0 ? lo : hi) = mid;
  }
  const double k = std::abs(radius_equation(lo, a, tau)) < std::abs(radius_equation(hi, a, tau)) ? lo : hi;
  const double res = std::abs(radius_equation(k, a, tau));
  if (res >= 1e-12) throw NumericalError("sector_radius: residual above 1e-12", res);
  return k;
}

}  // namespace nk
