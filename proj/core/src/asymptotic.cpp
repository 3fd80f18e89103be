#include "nk/asymptotic.hpp"

#include <cmath>
#include <numbers>

namespace nk {
namespace {

using cld = std::complex<long double>;
constexpr long double kPi = std::numbers::pi_v<long double>;

void check_delta(double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("delta must lie in (0, 1]");
}

// Principal zeta^p for zeta != 0.
cld principal_pow(cld zeta, long double p) {
  return std::exp(p * cld(std::log(std::abs(zeta)), std::arg(zeta)));
}

bool is_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

}  // namespace

bool in_sector(cplx zeta, const SectorSpec& sector) noexcept {
  const double r = std::abs(zeta);
  return r > 0.0 && r < sector.radius && std::abs(std::arg(zeta)) < sector.tau / 2;
}

double support_radius(double alpha) {
  if (!(alpha > 0)) throw DomainError("support_radius: alpha must be > 0");
  return std::pow(2.0 / alpha, 1.0 / alpha);
}

ScaledComplex asymptotic_kernel(cplx Z, cplx W, const KernelParams& params, double delta) {
  params.validate();
  check_delta(delta);
  const long double a = params.alpha;
  const long double n = params.n;
  const long double gamma = (1.0L - delta) / a;
  const long double n_delta = std::pow(n, static_cast<long double>(delta));
  const cld zeta = cld(Z) * std::conj(cld(W));

  const long double gauss =
      -0.5L * (std::pow(std::abs(cld(Z)), a) + std::pow(std::abs(cld(W)), a));
  long double log_mod = std::log(a * a / (4 * kPi)) + (delta + 2 * gamma) * std::log(n);
  long double phase = 0;

  if (zeta == cld{}) {
    if (a < 2) throw SingularityError("asymptotic_kernel: zeta = 0 with alpha < 2");
    if (a > 2) return {};
    log_mod += n_delta * gauss;
    return ScaledComplex::from_log_polar(log_mod, 0);
  }

  const long double log_abs = std::log(std::abs(zeta));
  const long double arg = std::arg(zeta);
  const cld half_power = principal_pow(zeta, a / 2);
  log_mod += (a / 2 - 1) * log_abs + n_delta * (half_power.real() + gauss);
  phase = (a / 2 - 1) * arg + n_delta * half_power.imag();
  return ScaledComplex::from_log_polar(log_mod, phase);
}

cplx error_ratio(cplx Z, cplx W, const KernelParams& params, double delta) {
  const ScaledComplex approx = asymptotic_kernel(Z, W, params, delta);
  const double shrink = std::pow(static_cast<double>(params.n), -(1.0 - delta) / params.alpha);
  const ScaledComplex exact = kernel(Z * shrink, W * shrink, params);
  return (exact / approx).value() - 1.0;
}

cplx segal_bargmann(cplx z, cplx w) noexcept {
  const cplx e = z * std::conj(w) - 0.5 * std::norm(z) - 0.5 * std::norm(w);
  return std::exp(e) / std::numbers::pi;
}

cplx conformal_rescaled_kernel(cplx z, cplx w, const KernelParams& params) {
  params.validate();
  const double p = 2.0 / params.alpha;
  if ((z == cplx{} || w == cplx{}) && !is_integer(p)) {
    throw DomainError("conformal_rescaled_kernel: branch point at 0");
  }
  const long double root_n = std::sqrt(static_cast<long double>(params.n));
  auto map = [&](cplx x) -> cplx {
    if (x == cplx{}) return {};
    return cplx(principal_pow(cld(x) / root_n, p));
  };
  // phi'(0) vanishes for integer p >= 2.
  if ((z == cplx{} || w == cplx{}) && p > 1.5) return {};
  auto log_derivative = [&](cplx x) -> cld {
    // ln phi'(x) = ln(p / sqrt N) + (p - 1) ln(x / sqrt N)
    if (x == cplx{}) return std::log(1.0L / root_n);
    const cld u = cld(x) / root_n;
    return std::log(p / root_n) +
           static_cast<long double>(p - 1) * cld(std::log(std::abs(u)), std::arg(u));
  };
  const cld lz = log_derivative(z);
  const cld lw = std::conj(log_derivative(w));
  ScaledComplex v = kernel(map(z), map(w), params);
  v *= ScaledComplex::from_log_polar(lz.real() + lw.real(), lz.imag() + lw.imag());
  return v.value();
}

double density_limit(cplx z, double alpha) {
  if (!(alpha > 0)) throw DomainError("density_limit: alpha must be > 0");
  const double r = std::abs(z);
  if (r > support_radius(alpha)) return 0.0;
  const double c = alpha * alpha / (4 * std::numbers::pi);
  if (r == 0.0) {
    if (alpha < 2) throw SingularityError("density_limit: density diverges at 0 for alpha < 2");
    return alpha == 2 ? c : 0.0;
  }
  return c * std::pow(r, alpha - 2);
}

}  // namespace nk
