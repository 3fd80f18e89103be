#ifndef NK_KERNEL_EXACT_HPP
#define NK_KERNEL_EXACT_HPP

#include <complex>

#include "nk/scaled_complex.hpp"

namespace nk {

using cplx = std::complex<double>;

/// Ensemble with weight exp(-N |z|^alpha); n is both the matrix size and
/// the number of monomials kept in the kernel.
struct KernelParams {
  double alpha = 2.0;
  int n = 1;

  /// Throws DomainError unless alpha > 0 (finite) and n >= 1.
  void validate() const;
};

/// ln of sqrt(alpha / (2 pi Gamma(2j/alpha))) * N^(j/alpha), the constant that
/// makes z^(j-1) unit-norm in L^2(exp(-N|z|^alpha) d^2z). 1 <= j <= n.
double monomial_log_norm(int j, const KernelParams& params);

/// Reproducing kernel of the degree < N polynomials:
///   (alpha/2pi) sum_{j=1}^{N} N^(2j/alpha) (z conj(w))^(j-1) / Gamma(2j/alpha).
/// Evaluated term by term in the log domain. The pair is put in a canonical
/// order first, so kernel_tilde(z, w) == conj(kernel_tilde(w, z)) exactly.
ScaledComplex kernel_tilde(cplx z, cplx w, const KernelParams& params);

/// kernel_tilde(z, w) * exp(-N (|z|^alpha + |w|^alpha) / 2).
ScaledComplex kernel(cplx z, cplx w, const KernelParams& params);

/// kernel(z, z) / N as a plain double. Throws RangeError (carrying the scaled
/// value) if the result overflows a double; underflow returns 0.
double density_exact(cplx z, const KernelParams& params);

/// |(phi_j, phi_k) - delta_jk| for the normalized monomials. The angular
/// integral is done analytically (0 unless j == k); the radial one by adaptive
/// quadrature, independent of the Gamma-function closed form used for the
/// normalization. Throws NumericalError if the quadrature does not converge.
double orthonormality_defect(int j, int k, const KernelParams& params);

}  // namespace nk

#endif  // NK_KERNEL_EXACT_HPP
