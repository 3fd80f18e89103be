#ifndef NK_TAYLOR_A2_HPP
#define NK_TAYLOR_A2_HPP

#include <complex>

#include "nk/scaled_complex.hpp"

namespace nk {

/// N zeta + (N zeta)^2 / 1! + ... + (N zeta)^N / (N-1)!, the degree-N Taylor
/// polynomial of N zeta exp(N zeta). n >= 1.
ScaledComplex truncated_exp(std::complex<double> zeta, int n);

/// truncated_exp / (N zeta exp(N zeta)) - 1. For |zeta| < 1 this is
/// evaluated as -exp(-N zeta) sum_{k>=N} (N zeta)^k / k!, which keeps full
/// relative accuracy when the error is tiny. Throws DomainError for zeta = 0.
std::complex<double> remainder_error(std::complex<double> zeta, int n);

/// Smallest positive root K of K exp(1 - (1 - a) K cos(tau/2)) = 1 for
/// 0 < a < 1 and 0 <= tau <= 2 pi: scan in steps of 0.01, then bisect the
/// first bracket. Throws DomainError for parameters out of range and
/// NumericalError if no bracket is found or the residual stays above 1e-12.
double sector_radius(double a, double tau);

}  // namespace nk

#endif  // NK_TAYLOR_A2_HPP
