#ifndef NK_EULER_MACLAURIN_HPP
#define NK_EULER_MACLAURIN_HPP

#include <complex>
#include <functional>

#include "nk/saddle.hpp"
#include "nk/scaled_complex.hpp"

namespace nk {

/// K equal subintervals of [a, b].
struct PartitionSpec {
  double a = 0.0;
  double b = 1.0;
  int k = 1;

  double spacing() const noexcept { return (b - a) / k; }
  /// a + j * spacing().
  double node(int j) const noexcept { return a + j * spacing(); }
  /// Throws DomainError unless a < b (both finite) and k >= 1.
  void validate() const;
};

using RealFunction = std::function<double(double)>;

/// Sum over subintervals of (integral - trapezoid). Each integral is done by
/// adaptive Gauss-Kronrod to 1e-12 absolute; NumericalError if that fails.
double trapezoid_error(const RealFunction& f, const PartitionSpec& p);

struct TrapezoidBound {
  double lower = 0.0;
  double upper = 0.0;
  /// Mean-value points of the first and last subinterval: f(t) equals the
  /// mean of f over that subinterval.
  double t_first = 0.0;
  double t_last = 0.0;
};

/// Bound on trapezoid_error for convex f:
///
///   -D/2 (max(f(x_0), f(x_1)) - f(t_first) + f(x_K) - f(t_last)) <= error <= 0,
///
/// D the spacing. The mean-value points are found numerically, leftmost when
/// several qualify. Throws ContractViolation when a subinterval has no
/// mean-value point, which only happens for non-convex input.
TrapezoidBound convex_error_bound(const RealFunction& f, const PartitionSpec& p);

/// Mirror image for concave f: 0 <= error <= upper.
TrapezoidBound concave_error_bound(const RealFunction& f, const PartitionSpec& p);

/// Euler-Maclaurin split of the summand sum S = sum_{j=1}^{N} g(j):
///
///   S = integral_1^N g + r1 + r2,
///   r1 = (g(1) + g(N)) / 2,
///   r2 = -sum_{j=1}^{N-1} (integral_j^{j+1} g - (g(j) + g(j+1)) / 2).
///
/// The hats divide by N^(delta/2) max|g|, which makes them O(1) or smaller.
struct EmDecomposition {
  ScaledComplex integral;
  ScaledComplex r1;
  ScaledComplex r2;
  std::complex<double> r1_hat;
  std::complex<double> r2_hat;
  ScaledComplex direct_sum;
  /// |integral + r1 + r2 - direct_sum| / |direct_sum|
  double recombination_residual = 0.0;
};

/// Throws ConsistencyError when the recombination residual exceeds 1e-9 and
/// NumericalError when a quadrature fails.
EmDecomposition em_decompose(const SummandContext& ctx);

}  // namespace nk

#endif  // NK_EULER_MACLAURIN_HPP
