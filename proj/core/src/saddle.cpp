#include "nk/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "nk/specfun.hpp"

namespace nk {
namespace {

using cplx = std::complex<double>;
using cld = std::complex<long double>;

cld principal_pow(cld zeta, long double p) {
  return std::exp(p * cld(std::log(std::abs(zeta)), std::arg(zeta)));
}

// (2 delta/alpha) ln N + ln|zeta|
long double log_base(const SummandContext& ctx) {
  return 2.0L * ctx.delta / ctx.alpha * std::log(static_cast<long double>(ctx.n)) +
         std::log(std::abs(cld(ctx.zeta)));
}

long double residual_ld(long double x, const SummandContext& ctx) {
  const long double a = ctx.alpha;
  return log_base(ctx) - 2.0L / a * digamma(2.0L * x / a);
}

void require_nonzero(const SummandContext& ctx, const char* who) {
  if (std::abs(ctx.zeta) < 1e-6) throw DomainError(std::string(who) + ": requires |zeta| >= 1e-6");
}

}  // namespace

double SummandContext::theta() const noexcept {
  return std::arg(zeta) * std::pow(static_cast<double>(n), beta);
}

void SummandContext::validate() const {
  if (!(alpha > 0) || !std::isfinite(alpha)) throw DomainError("SummandContext: alpha must be > 0");
  if (!(delta > 0 && delta <= 1)) throw DomainError("SummandContext: delta must lie in (0, 1]");
  if (n < 1) throw DomainError("SummandContext: n must be >= 1");
  if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag())) {
    throw DomainError("SummandContext: zeta must be finite");
  }
}

ScaledComplex g_eval(double x, const SummandContext& ctx) {
  ctx.validate();
  if (!(x > 0) || !std::isfinite(x)) throw DomainError("g_eval: requires finite x > 0");
  if (ctx.zeta == cplx{}) return {};
  const long double xl = x;
  const long double log_mod = xl * log_base(ctx) - log_gamma(2.0L * xl / ctx.alpha);
  return ScaledComplex::from_log_polar(log_mod, xl * std::arg(cld(ctx.zeta)));
}

ScaledComplex summand_sum(const SummandContext& ctx) {
  ctx.validate();
  if (ctx.zeta == cplx{}) return {};
  const long double base = log_base(ctx);
  const long double phase = std::arg(cld(ctx.zeta));
  std::vector<LogTermL> terms(static_cast<std::size_t>(ctx.n));
  for (int j = 1; j <= ctx.n; ++j) {
    terms[j - 1] = {j * base - log_gamma(2.0L * j / ctx.alpha), j * phase};
  }
  return scaled_sum(std::span<const LogTermL>(terms));
}

double n0_threshold(const SummandContext& ctx) {
  ctx.validate();
  const double r = std::abs(ctx.zeta);
  double n0 = std::pow(ctx.k_const / r, ctx.alpha / (2 * ctx.delta));
  if (ctx.delta < 1) {
    n0 = std::max(n0, std::pow(ctx.alpha / 2 * std::pow(r, ctx.alpha / 2), 1 / (1 - ctx.delta)));
  }
  return n0;
}

double xstar_residual(double x, const SummandContext& ctx) {
  return static_cast<double>(residual_ld(x, ctx));
}

double find_xstar(const SummandContext& ctx) {
  ctx.validate();
  require_nonzero(ctx, "find_xstar");

  // The residual decreases strictly in x because psi increases.
  long double lo = 1e-12L;
  long double hi = 10.0L * ctx.n;
  if (residual_ld(hi, ctx) > 0) {
    throw NumericalError("find_xstar: root not bracketed in [1e-12, 10N]",
                         static_cast<double>(residual_ld(hi, ctx)));
  }
  while (hi - lo > 1e-8L) {
    const long double mid = 0.5L * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (residual_ld(mid, ctx) > 0 ? lo : hi) = mid;
  }

  long double x = 0.5L * (lo + hi);
  for (int step = 0; step < 2; ++step) {
    const long double h = 1e-6L * std::max(1.0L, x);
    const long double slope = (residual_ld(x + h, ctx) - residual_ld(x - h, ctx)) / (2 * h);
    if (slope == 0) break;
    const long double next = x - residual_ld(x, ctx) / slope;
    if (next > 0) x = next;
  }

  const double res = std::abs(xstar_residual(static_cast<double>(x), ctx));
  if (res >= 1e-12) throw NumericalError("find_xstar: residual above 1e-12", res);
  return static_cast<double>(x);
}

double xstar_asymptotic(const SummandContext& ctx) {
  ctx.validate();
  const double a = ctx.alpha;
  return a / 2 * std::pow(std::abs(ctx.zeta), a / 2) * std::pow(ctx.n, ctx.delta) + a / 4;
}

ScaledComplex gmax_asymptotic(const SummandContext& ctx) {
  ctx.validate();
  require_nonzero(ctx, "gmax_asymptotic");
  const long double a = ctx.alpha;
  const long double d = ctx.delta;
  const long double r = std::abs(cld(ctx.zeta));
  const long double log_n = std::log(static_cast<long double>(ctx.n));
  const long double v = std::pow(r, a / 2) * std::exp(d * log_n) + d / 2 * log_n +
                        a / 4 * std::log(r) - 0.5L * std::log(2 * std::numbers::pi_v<long double>);
  return ScaledComplex::from_log_polar(v, 0);
}

double log_offset_decay(const SummandContext& ctx, double multiple) {
  const double x = find_xstar(ctx);
  const double off = multiple * std::pow(ctx.n, ctx.delta / 2) * std::log(static_cast<double>(ctx.n));
  if (x - off <= 0) throw DomainError("offset_decay: x* - offset is not positive");
  SummandContext abs_ctx = ctx;
  abs_ctx.zeta = std::abs(ctx.zeta);
  return g_eval(x + off, abs_ctx).log_abs() - g_eval(x, abs_ctx).log_abs();
}

double offset_decay(const SummandContext& ctx, double multiple) {
  return std::exp(log_offset_decay(ctx, multiple));
}

cplx saddle_point(cplx zeta, double alpha) {
  if (!(alpha > 0)) throw DomainError("saddle_point: alpha must be > 0");
  if (zeta == cplx{}) throw DomainError("saddle_point: zeta = 0");
  return cplx(static_cast<long double>(alpha) / 2 * principal_pow(cld(zeta), alpha / 2.0L));
}

cplx h_eval(cplx eta, cplx zeta, double alpha) {
  if (!(alpha > 0)) throw DomainError("h_eval: alpha must be > 0");
  if (eta == cplx{}) throw DomainError("h_eval: eta = 0");
  if (zeta == cplx{}) throw DomainError("h_eval: zeta = 0");
  const cld e(eta);
  const cld peak = saddle_point(zeta, alpha);
  // alpha e zeta^(alpha/2) / (2 eta) = e * peak / eta
  return cplx(2.0L * e / static_cast<long double>(alpha) * (std::log(peak / e) + 1.0L) -
              std::pow(std::abs(cld(zeta)), alpha / 2.0L));
}

ScaledComplex steepest_descent_sum(const SummandContext& ctx) {
  ctx.validate();
  require_nonzero(ctx, "steepest_descent_sum");
  const long double a = ctx.alpha;
  const long double d = ctx.delta;
  const long double n = ctx.n;
  const cld zeta(ctx.zeta);

  const long double radius = std::pow(2 * std::pow(n, 1 - d) / a, 2 / a);
  const long double half_opening = ctx.theta_max / (2 * std::pow(n, static_cast<long double>(ctx.beta)));
  if (std::abs(zeta) >= radius || std::abs(std::arg(zeta)) >= half_opening) {
    throw DomainError("steepest_descent_sum: zeta outside the admissible sector");
  }

  const cld half_power = principal_pow(zeta, a / 2);
  const long double n_delta = std::pow(n, d);
  const long double log_mod = half_power.real() * n_delta + d * std::log(n) +
                              std::log(a * std::abs(half_power) / 2);
  const long double phase = half_power.imag() * n_delta + std::arg(half_power);
  return ScaledComplex::from_log_polar(log_mod, phase);
}

}  // namespace nk
