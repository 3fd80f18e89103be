#ifndef NK_SPECFUN_HPP
#define NK_SPECFUN_HPP

#include <concepts>
#include <span>

#include "nk/scaled_complex.hpp"

namespace nk {

/// ln Gamma(x) for real x > 0.
///
/// Stirling series above a shift threshold, upward recurrence below it, and a
/// zeta-series around x = 1 and x = 2 so the result keeps full relative
/// precision next to the two zeros of ln Gamma. The long double overload is
/// used wherever term exponents reach the thousands and double rounding of the
/// exponent would show up in the summed value. Throws DomainError for x <= 0
/// or non-finite x.
double log_gamma(double x);
long double log_gamma(long double x);

/// psi(x) = Gamma'(x)/Gamma(x) for real x > 0. Asymptotic series after
/// shifting with psi(x+1) = psi(x) + 1/x, Taylor series around the positive
/// root x0 = 1.4616... Throws DomainError for x <= 0 or non-finite x.
double digamma(double x);
long double digamma(long double x);

/// One summand exp(log_modulus + i phase). log_modulus may be -inf.
template <std::floating_point T>
struct BasicLogTerm {
  T log_modulus;
  T phase;
};
using LogTerm = BasicLogTerm<double>;
using LogTermL = BasicLogTerm<long double>;

/// Sum of exp(log_modulus_k + i phase_k), computed by factoring out the
/// largest modulus. Empty input or all -inf moduli give zero; NaN or +inf
/// throws DomainError.
ScaledComplex scaled_sum(std::span<const LogTerm> terms);
ScaledComplex scaled_sum(std::span<const LogTermL> terms);

}  // namespace nk

#endif  // NK_SPECFUN_HPP
