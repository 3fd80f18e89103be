#ifndef NK_CORRELATIONS_HPP
#define NK_CORRELATIONS_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "nk/kernel_exact.hpp"
#include "nk/scaled_complex.hpp"

namespace nk {

/// Largest number of points accepted by the determinant routines.
inline constexpr int kMaxPoints = 12;

/// Kernel matrix K_N(z_i, z_j) stored as exp(matrix_log_scale) * significand.
struct CorrelationResult {
  std::vector<cplx> points;
  double matrix_log_scale = 0.0;
  Eigen::MatrixXcd matrix_significand;
  ScaledComplex det_value;
  /// Segal-Bargmann prediction, filled by scaling_limit_check.
  double limit_prediction = 0.0;
};

/// Builds the kernel matrix with the largest diagonal log value as the common
/// scale, and its determinant (the n-point correlation function). 1 <= n <= 12.
CorrelationResult kernel_matrix(const std::vector<cplx>& points, const KernelParams& params);

/// Determinant of exp(log_scale) * m by LU with partial pivoting. A pivot
/// below 64 eps times the largest entry counts as singular and gives zero.
ScaledComplex det_scaled(const Eigen::MatrixXcd& m, double log_scale = 0.0);

/// r + z_i / sqrt(pi K_N(r, r)). Throws DomainError unless
/// 0 < |r| < (2/alpha)^(1/alpha) - 1e-3.
std::vector<cplx> scaled_points(cplx r, const std::vector<cplx>& offsets,
                                const KernelParams& params);

struct ScalingLimit {
  /// det K_N(Z_i, Z_j) / (pi K_N(r, r))^n at the scaled points.
  double measured = 0.0;
  /// det of the Segal-Bargmann matrix at the offsets.
  double predicted = 0.0;
};

ScalingLimit scaling_limit_check(cplx r, const std::vector<cplx>& offsets,
                                 const KernelParams& params);

/// Closed form (1/pi^2)(1 - exp(-|z1 - z2|^2)) of the two-point limit.
double two_point_limit(cplx z1, cplx z2) noexcept;

/// Compares det C, C_ij = (1/pi) exp(A_ij + i sqrt(N) (l_i - l_j)), with
/// det D, D_ij = (1/pi) exp(A_ij), where A_ij = z_i conj(z_j) - |z_i|^2/2 -
/// |z_j|^2/2 and l_i is the phase shift of the rescaled point. Returns
/// |det C - det D| / |det D|. Requires N above the large-N gate with k = 10
/// (DomainError) and |det D| > 0 (DomainError).
double gauge_check(cplx r, const std::vector<cplx>& offsets, const KernelParams& params);

}  // namespace nk

#endif  // NK_CORRELATIONS_HPP
