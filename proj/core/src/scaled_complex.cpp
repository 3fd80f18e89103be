#include "nk/scaled_complex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

namespace nk {
namespace {

using cld = std::complex<long double>;

constexpr double kE = std::numbers::e;
// Largest/smallest ln|x| for which x is a normal, finite double.
constexpr double kMaxLog = 709.782712893384;
constexpr double kMinLog = -708.3964185322641;

bool finite(cld z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ScaledComplex::ScaledComplex(long double log_scale, cld significand) {
  if (!std::isfinite(log_scale) || !finite(significand)) {
    throw DomainError("ScaledComplex: non-finite input");
  }
  if (significand == cld{}) return;

  const long double m = log_scale + std::log(std::abs(significand));
  long double k = std::floor(m);
  std::complex<double> s(significand * std::exp(log_scale - k));

  // Rounding can leave |s| a hair outside [1, e).
  for (int guard = 0; guard < 4; ++guard) {
    const double a = std::abs(s);
    if (a < 1.0) {
      k -= 1;
      s *= kE;
    } else if (a >= kE) {
      k += 1;
      s /= kE;
    } else {
      break;
    }
  }
  log_scale_ = static_cast<double>(k);
  significand_ = s;
}

ScaledComplex ScaledComplex::from_log_polar(long double log_modulus, long double phase) {
  if (std::isnan(log_modulus) || !std::isfinite(phase)) {
    throw DomainError("ScaledComplex::from_log_polar: NaN input");
  }
  if (log_modulus == -std::numeric_limits<long double>::infinity()) return {};
  if (!std::isfinite(log_modulus)) {
    throw DomainError("ScaledComplex::from_log_polar: infinite modulus");
  }
  const long double k = std::floor(log_modulus);
  return ScaledComplex(k, std::polar(std::exp(log_modulus - k), phase));
}

ScaledComplex ScaledComplex::from_complex(std::complex<double> z) {
  return ScaledComplex(0.0L, cld(z));
}

double ScaledComplex::log_abs() const noexcept {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return log_scale_ + std::log(std::abs(significand_));
}

double ScaledComplex::arg() const noexcept {
  return is_zero() ? 0.0 : std::arg(significand_);
}

bool ScaledComplex::fits_double() const noexcept {
  if (is_zero()) return true;
  const double l = log_abs();
  return l < kMaxLog && l > kMinLog;
}

std::complex<long double> ScaledComplex::value_ld() const noexcept {
  if (is_zero()) return {};
  const long double scale = std::exp(static_cast<long double>(log_scale_));
  const long double re = significand_.real() == 0.0 ? 0.0L : significand_.real() * scale;
  const long double im = significand_.imag() == 0.0 ? 0.0L : significand_.imag() * scale;
  return {re, im};
}

std::complex<double> ScaledComplex::value() const noexcept {
  const cld v = value_ld();
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

ScaledComplex ScaledComplex::conj() const noexcept {
  ScaledComplex out = *this;
  out.significand_ = std::conj(significand_);
  return out;
}

ScaledComplex ScaledComplex::operator-() const noexcept {
  ScaledComplex out = *this;
  out.significand_ = -significand_;
  return out;
}

ScaledComplex& ScaledComplex::operator*=(const ScaledComplex& rhs) {
  if (is_zero() || rhs.is_zero()) {
    *this = ScaledComplex{};
    return *this;
  }
  *this = ScaledComplex(static_cast<long double>(log_scale_) + rhs.log_scale_,
                        cld(significand_) * cld(rhs.significand_));
  return *this;
}

ScaledComplex& ScaledComplex::operator/=(const ScaledComplex& rhs) {
  if (rhs.is_zero()) throw SingularityError("ScaledComplex: division by zero");
  if (is_zero()) return *this;
  *this = ScaledComplex(static_cast<long double>(log_scale_) - rhs.log_scale_,
                        cld(significand_) / cld(rhs.significand_));
  return *this;
}

ScaledComplex& ScaledComplex::operator+=(const ScaledComplex& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    *this = rhs;
    return *this;
  }
  const long double k = std::max(log_scale_, rhs.log_scale_);
  const cld s = cld(significand_) * std::exp(log_scale_ - k) +
                cld(rhs.significand_) * std::exp(rhs.log_scale_ - k);
  *this = ScaledComplex(k, s);
  return *this;
}

ScaledComplex& ScaledComplex::operator-=(const ScaledComplex& rhs) { return *this += -rhs; }

std::ostream& operator<<(std::ostream& os, const ScaledComplex& v) {
  return os << "exp(" << v.log_scale() << ")*(" << v.significand().real() << ","
            << v.significand().imag() << ")";
}

}  // namespace nk
