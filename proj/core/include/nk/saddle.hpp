#ifndef NK_SADDLE_HPP
#define NK_SADDLE_HPP

#include <complex>

#include "nk/scaled_complex.hpp"

namespace nk {

/// Everything the summand g(x) = (N^(2 delta/alpha) zeta)^x / Gamma(2x/alpha)
/// depends on. gamma and theta are always derived, never stored.
struct SummandContext {
  double alpha = 2.0;
  double delta = 1.0;
  int n = 1;
  std::complex<double> zeta{1.0, 0.0};
  /// Angle scaling exponent: zeta = |zeta| exp(i theta / N^beta).
  double beta = 0.5;
  /// Constant k of the large-N gate; the literature leaves it unquantified.
  double k_const = 10.0;
  /// Largest admissible theta for the steepest-descent leading term.
  double theta_max = 2.0;

  /// (1 - delta) / alpha, so that alpha * gamma + delta = 1.
  double gamma() const noexcept { return (1.0 - delta) / alpha; }
  /// arg(zeta) * N^beta.
  double theta() const noexcept;
  /// Throws DomainError unless alpha > 0, delta in (0, 1], n >= 1, finite zeta.
  void validate() const;
};

/// g(x) in the log domain: modulus x ((2 delta/alpha) ln N + ln|zeta|) -
/// ln Gamma(2x/alpha), phase x arg(zeta). Throws DomainError for x <= 0.
ScaledComplex g_eval(double x, const SummandContext& ctx);

/// Sum of g(j) for j = 1..N.
ScaledComplex summand_sum(const SummandContext& ctx);

/// max((k/|zeta|)^(alpha/(2 delta)), ((alpha/2)|zeta|^(alpha/2))^(1/(1-delta))),
/// the second term only for delta < 1.
double n0_threshold(const SummandContext& ctx);

/// ln(N^(2 delta/alpha) |zeta|) - (2/alpha) psi(2x/alpha); zero at the maximizer.
double xstar_residual(double x, const SummandContext& ctx);

/// Maximizer of |g| on (0, inf): bisection on [1e-12, 10 N] down to width
/// 1e-8, then two Newton steps with a finite-difference slope. Requires
/// |zeta| >= 1e-6 (DomainError); throws NumericalError when the root is not
/// bracketed or the final residual exceeds 1e-12.
double find_xstar(const SummandContext& ctx);

/// (alpha/2) |zeta|^(alpha/2) N^delta + alpha/4, the first two terms of the
/// large-N expansion of the maximizer.
double xstar_asymptotic(const SummandContext& ctx);

/// (2 pi)^(-1/2) |zeta|^(alpha/4) N^(delta/2) exp(|zeta|^(alpha/2) N^delta),
/// the leading term of max |g|.
ScaledComplex gmax_asymptotic(const SummandContext& ctx);

/// ln(|g(x* + m N^(delta/2) ln N)| / |g(x*)|) with m = multiple. Throws
/// DomainError when x* - m N^(delta/2) ln N <= 0.
double log_offset_decay(const SummandContext& ctx, double multiple = 1.0);
double offset_decay(const SummandContext& ctx, double multiple = 1.0);

/// Stationary point alpha zeta^(alpha/2) / 2 of h. Throws DomainError for zeta = 0.
std::complex<double> saddle_point(std::complex<double> zeta, double alpha);

/// h(eta) = (2 eta/alpha) log(alpha e zeta^(alpha/2) / (2 eta)) - |zeta|^(alpha/2),
/// principal branch. Throws DomainError for eta = 0 or zeta = 0.
std::complex<double> h_eval(std::complex<double> eta, std::complex<double> zeta, double alpha);

/// Leading term (alpha/2) zeta^(alpha/2) N^delta exp(zeta^(alpha/2) N^delta)
/// of the sum of g(j). Throws DomainError unless |zeta| < (2 N^(1-delta)/alpha)^(2/alpha)
/// and |arg zeta| < theta_max / (2 N^beta).
ScaledComplex steepest_descent_sum(const SummandContext& ctx);

}  // namespace nk

#endif  // NK_SADDLE_HPP
