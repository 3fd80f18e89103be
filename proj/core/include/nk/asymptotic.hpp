#ifndef NK_ASYMPTOTIC_HPP
#define NK_ASYMPTOTIC_HPP

#include <complex>

#include "nk/kernel_exact.hpp"
#include "nk/scaled_complex.hpp"

namespace nk {

/// Points with 0 < |zeta| < radius and |arg zeta| < tau / 2.
struct SectorSpec {
  double tau = 0.0;
  double radius = 1.0;
};

bool in_sector(cplx zeta, const SectorSpec& sector) noexcept;

/// Leading-order large-N form of kernel(Z / N^gamma, W / N^gamma), with
/// alpha * gamma + delta = 1:
///
///   N^(delta + 2 gamma) (alpha^2 / 4 pi) zeta^(alpha/2 - 1)
///     * exp(N^delta (zeta^(alpha/2) - |Z|^alpha / 2 - |W|^alpha / 2)),
///
/// zeta = Z conj(W), principal branch. At delta = 1 it is directly comparable
/// with kernel(Z, W). Throws DomainError for delta outside (0, 1] and
/// SingularityError for zeta = 0 when alpha < 2.
ScaledComplex asymptotic_kernel(cplx Z, cplx W, const KernelParams& params, double delta = 1.0);

/// exact / asymptotic - 1, formed in scaled space, where exact is
/// kernel(Z / N^gamma, W / N^gamma).
cplx error_ratio(cplx Z, cplx W, const KernelParams& params, double delta = 1.0);

/// (1/pi) exp(z conj(w) - |z|^2/2 - |w|^2/2).
cplx segal_bargmann(cplx z, cplx w) noexcept;

/// phi'(z) kernel(phi(z), phi(w)) conj(phi'(w)) with phi(z) = (z / sqrt N)^(2/alpha).
/// Tends to segal_bargmann(z, w) as N grows. Throws DomainError for z or w = 0
/// when 2/alpha is not an integer (branch point).
cplx conformal_rescaled_kernel(cplx z, cplx w, const KernelParams& params);

/// Limiting eigenvalue density (alpha^2 / 4 pi) |z|^(alpha - 2) on the disc
/// |z| <= (2/alpha)^(1/alpha), zero outside. Throws SingularityError at z = 0
/// for alpha < 2.
double density_limit(cplx z, double alpha);

/// Radius (2/alpha)^(1/alpha) of the limiting support.
double support_radius(double alpha);

}  // namespace nk

#endif  // NK_ASYMPTOTIC_HPP
