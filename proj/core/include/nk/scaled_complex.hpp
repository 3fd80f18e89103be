#ifndef NK_SCALED_COMPLEX_HPP
#define NK_SCALED_COMPLEX_HPP

#include <complex>
#include <iosfwd>

#include "nk/error.hpp"

namespace nk {

/// A complex number stored as exp(log_scale) * significand.
///
/// Kernel sums grow like exp(N |z|^alpha), far beyond the range of a double
/// for the matrix sizes of interest, so every kernel value travels in this
/// form. The representation is canonical: log_scale is an integer-valued
/// double and 1 <= |significand| < e, except for zero, which is stored as
/// (0, 0). Equal numbers therefore compare equal field by field.
class ScaledComplex {
 public:
  ScaledComplex() = default;

  /// Normalizes exp(log_scale) * significand. Non-finite input throws
  /// DomainError; a zero significand yields the canonical zero.
  ScaledComplex(long double log_scale, std::complex<long double> significand);

  /// exp(log_modulus + i phase). log_modulus == -inf gives zero.
  static ScaledComplex from_log_polar(long double log_modulus, long double phase);
  static ScaledComplex from_complex(std::complex<double> z);

  double log_scale() const noexcept { return log_scale_; }
  std::complex<double> significand() const noexcept { return significand_; }

  bool is_zero() const noexcept { return significand_ == std::complex<double>{}; }

  /// ln|value|, -inf for zero.
  double log_abs() const noexcept;
  /// Principal argument in (-pi, pi]; 0 for zero.
  double arg() const noexcept;

  /// True when value() is representable without overflow or total underflow.
  bool fits_double() const noexcept;
  /// Unscaled value; components overflow to +-inf outside the double range.
  std::complex<double> value() const noexcept;
  std::complex<long double> value_ld() const noexcept;

  ScaledComplex conj() const noexcept;
  ScaledComplex operator-() const noexcept;

  ScaledComplex& operator*=(const ScaledComplex& rhs);
  /// Throws SingularityError on division by zero.
  ScaledComplex& operator/=(const ScaledComplex& rhs);
  ScaledComplex& operator+=(const ScaledComplex& rhs);
  ScaledComplex& operator-=(const ScaledComplex& rhs);

  friend ScaledComplex operator*(ScaledComplex a, const ScaledComplex& b) { return a *= b; }
  friend ScaledComplex operator/(ScaledComplex a, const ScaledComplex& b) { return a /= b; }
  friend ScaledComplex operator+(ScaledComplex a, const ScaledComplex& b) { return a += b; }
  friend ScaledComplex operator-(ScaledComplex a, const ScaledComplex& b) { return a -= b; }

  friend bool operator==(const ScaledComplex&, const ScaledComplex&) = default;

 private:
  double log_scale_ = 0.0;
  std::complex<double> significand_{};
};

std::ostream& operator<<(std::ostream& os, const ScaledComplex& v);

/// Thrown when a ScaledComplex result has to be returned as a plain double
/// but does not fit. The scaled value travels with the exception.
class RangeError : public Error {
 public:
  RangeError(const std::string& what, ScaledComplex value) : Error(what), value_(value) {}
  const ScaledComplex& value() const noexcept { return value_; }

 private:
  ScaledComplex value_;
};

}  // namespace nk

#endif  // NK_SCALED_COMPLEX_HPP
