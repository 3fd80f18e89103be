#ifndef NK_RADIAL_SAMPLER_HPP
#define NK_RADIAL_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "nk/kernel_exact.hpp"

namespace nk {

/// Eigenvalue moduli of one draw from the radial ensemble.
///
/// For a rotation-invariant weight the set of moduli has the law of N
/// independent variables R_j with density proportional to
/// r^(2j-1) exp(-N r^alpha), i.e. R_j = G_j^(1/alpha) with G_j ~ Gamma(2j/alpha,
/// rate N). Only radial statistics are available this way; the angles are not
/// independent and are not sampled.
struct RadialSample {
  std::vector<double> radii;
  std::uint64_t seed = 0;
  KernelParams params;
};

/// Deterministic in (params, seed) on every platform: the generator is
/// mt19937_64 and the gamma and normal draws are implemented here rather
/// than taken from <random>, whose distributions are implementation defined.
RadialSample sample_radii(const KernelParams& params, std::uint64_t seed);

struct RadialHistogram {
  /// bins + 1 equally spaced edges over [0, 1.2 (2/alpha)^(1/alpha)].
  std::vector<double> edges;
  std::vector<double> observed;
  /// Expected counts from the limiting radial marginal (N alpha^2 / 2) r^(alpha-1).
  std::vector<double> predicted;
};

/// Pools all samples (they must share params). Throws DomainError for an
/// empty pool, mismatched params or bins < 4.
RadialHistogram empirical_radial_density(const std::vector<RadialSample>& pool, int bins);

/// Limiting CDF of a single modulus, min((alpha/2) r^alpha, 1) for r >= 0.
double limit_radial_cdf(double r, double alpha);

/// Kolmogorov-Smirnov distance between the empirical CDF of all pooled radii
/// and limit_radial_cdf.
double ks_distance(const std::vector<RadialSample>& pool);

}  // namespace nk

#endif  // NK_RADIAL_SAMPLER_HPP
