#include "nk/kernel_exact.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "nk/specfun.hpp"
#include "quadrature.hpp"

namespace nk {
namespace {

using cld = std::complex<long double>;
constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr double kMaxLog = 709.782712893384;

void check_finite(cplx z, const char* who) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(who) + ": non-finite argument");
  }
}

long double log_abs(cplx z) { return std::log(std::abs(cld(z))); }

// (alpha/2pi) sum_j N^(2j/alpha) (z conj w)^(j-1) / Gamma(2j/alpha), times
// exp(extra_log). Assumes the caller fixed the argument order.
ScaledComplex kernel_sum(cplx z, cplx w, const KernelParams& p, long double extra_log) {
  const long double alpha = p.alpha;
  const long double log_n = std::log(static_cast<long double>(p.n));
  const long double base = std::log(alpha / (2 * kPi)) + extra_log;

  const bool degenerate = (z == cplx{} || w == cplx{});
  const long double log_zeta = degenerate ? 0.0L : log_abs(z) + log_abs(w);
  const long double phase = degenerate ? 0.0L : std::arg(cld(z) * std::conj(cld(w)));

  const int terms = degenerate ? 1 : p.n;
  std::vector<LogTermL> buf(static_cast<std::size_t>(terms));
  for (int j = 1; j <= terms; ++j) {
    const long double s = 2.0L * j / alpha;
    buf[j - 1] = {base + s * log_n + (j - 1) * log_zeta - log_gamma(s), (j - 1) * phase};
  }
  return scaled_sum(std::span<const LogTermL>(buf));
}

// Lexicographic order on (re, im); the kernel is always summed with the
// larger argument first and conjugated otherwise.
bool canonical(cplx z, cplx w) {
  if (z.real() != w.real()) return z.real() > w.real();
  return z.imag() >= w.imag();
}

}  // namespace

void KernelParams::validate() const {
  if (!(alpha > 0) || !std::isfinite(alpha)) throw DomainError("KernelParams: alpha must be > 0");
  if (n < 1) throw DomainError("KernelParams: n must be >= 1");
}

double monomial_log_norm(int j, const KernelParams& params) {
  params.validate();
  if (j < 1 || j > params.n) throw DomainError("monomial_log_norm: j outside [1, n]");
  const long double s = 2.0L * j / params.alpha;
  const long double v =
      0.5L * (std::log(params.alpha / (2 * kPi)) - log_gamma(s)) +
      (static_cast<long double>(j) / params.alpha) * std::log(static_cast<long double>(params.n));
  return static_cast<double>(v);
}

ScaledComplex kernel_tilde(cplx z, cplx w, const KernelParams& params) {
  params.validate();
  check_finite(z, "kernel_tilde");
  check_finite(w, "kernel_tilde");
  if (canonical(z, w)) return kernel_sum(z, w, params, 0.0L);
  return kernel_sum(w, z, params, 0.0L).conj();
}

ScaledComplex kernel(cplx z, cplx w, const KernelParams& params) {
  params.validate();
  check_finite(z, "kernel");
  check_finite(w, "kernel");
  const long double a = params.alpha;
  const long double gauss =
      -0.5L * params.n * (std::pow(std::abs(cld(z)), a) + std::pow(std::abs(cld(w)), a));
  if (canonical(z, w)) return kernel_sum(z, w, params, gauss);
  return kernel_sum(w, z, params, gauss).conj();
}

double density_exact(cplx z, const KernelParams& params) {
  ScaledComplex v = kernel(z, z, params);
  v /= ScaledComplex::from_complex(static_cast<double>(params.n));
  if (v.log_abs() >= kMaxLog) {
    throw RangeError("density_exact: value overflows a double", v);
  }
  return v.value().real();
}

double orthonormality_defect(int j, int k, const KernelParams& params) {
  params.validate();
  if (j < 1 || j > params.n || k < 1 || k > params.n) {
    throw DomainError("orthonormality_defect: index outside [1, n]");
  }
  if (j != k) return 0.0;

  const double alpha = params.alpha;
  const double n = params.n;
  const double log_c = std::log(2 * std::numbers::pi) + 2 * monomial_log_norm(j, params);
  const double power = 2.0 * j - 1;
  auto log_f = [&](double r) { return log_c + power * std::log(r) - n * std::pow(r, alpha); };
  auto f = [&](double r) { return r > 0 ? std::exp(log_f(r)) : 0.0; };

  const double peak = std::pow(power / (alpha * n), 1.0 / alpha);
  const double top = log_f(peak);
  double hi = 2 * peak;
  while (log_f(hi) > top - 80.0) hi *= 1.5;

  constexpr double tol = 1e-13;
  const double inner = detail::adaptive_checked(f, 0.0, peak, tol, "orthonormality_defect");
  const double outer = detail::adaptive_checked(f, peak, hi, tol, "orthonormality_defect");
  return std::abs(inner + outer - 1.0);
}

}  // namespace nk
