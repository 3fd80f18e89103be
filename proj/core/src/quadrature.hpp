#ifndef NK_SRC_QUADRATURE_HPP
#define NK_SRC_QUADRATURE_HPP

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <string>

#include "nk/error.hpp"

namespace nk::detail {

struct Quadrature {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
};

// Adaptive 31-point Gauss-Kronrod on [a, b]. Stops when the error estimate
// falls below rel_tol times the L1 norm of the integrand.
template <class F>
Quadrature adaptive(F&& f, double a, double b, double rel_tol, unsigned max_depth = 18) {
  Quadrature q;
  q.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, a, b, max_depth, rel_tol, &q.error, &q.l1);
  return q;
}

// Same, but throws NumericalError when the estimate misses rel_tol by more
// than `slack`.
template <class F>
double adaptive_checked(F&& f, double a, double b, double rel_tol, const char* who,
                        double slack = 100.0) {
  const Quadrature q = adaptive(f, a, b, rel_tol);
  const double achieved = q.l1 > 0 ? q.error / q.l1 : q.error;
  if (!std::isfinite(q.value) || achieved > slack * rel_tol) {
    throw NumericalError(std::string(who) + ": quadrature did not converge", achieved);
  }
  return q.value;
}

// Fixed 20-point Gauss-Legendre on [a, b]; for short intervals of analytic
// integrands.
template <class F>
auto gauss20(F&& f, double a, double b) {
  return boost::math::quadrature::gauss<double, 20>::integrate(f, a, b);
}

}  // namespace nk::detail

#endif  // NK_SRC_QUADRATURE_HPP
