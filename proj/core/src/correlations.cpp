#include "nk/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "nk/asymptotic.hpp"

namespace nk {
namespace {

constexpr double kPi = std::numbers::pi;

void check_size(std::size_t n, const char* who) {
  if (n < 1 || n > static_cast<std::size_t>(kMaxPoints)) {
    throw DomainError(std::string(who) + ": between 1 and 12 points required");
  }
}

Eigen::MatrixXcd segal_bargmann_matrix(const std::vector<cplx>& z) {
  const auto n = static_cast<Eigen::Index>(z.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = segal_bargmann(z[i], z[j]);
  }
  return m;
}

}  // namespace

ScaledComplex det_scaled(const Eigen::MatrixXcd& m, double log_scale) {
  if (m.rows() != m.cols()) throw DomainError("det_scaled: matrix must be square");
  check_size(static_cast<std::size_t>(m.rows()), "det_scaled");
  const Eigen::Index n = m.rows();
  Eigen::MatrixXcd lu = m;
  const double largest = m.cwiseAbs().maxCoeff();
  if (!(largest > 0)) return {};
  const double floor = 64 * std::numeric_limits<double>::epsilon() * largest;

  long double log_mod = n * static_cast<long double>(log_scale);
  long double phase = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
    }
    if (std::abs(lu(p, k)) <= floor) return {};
    if (p != k) {
      lu.row(p).swap(lu.row(k));
      phase += std::numbers::pi_v<long double>;
    }
    const cplx pivot = lu(k, k);
    log_mod += std::log(static_cast<long double>(std::abs(pivot)));
    phase += std::arg(pivot);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const cplx f = lu(i, k) / pivot;
      lu.row(i).tail(n - k - 1) -= f * lu.row(k).tail(n - k - 1);
    }
  }
  return ScaledComplex::from_log_polar(log_mod, std::remainder(phase, 2 * std::numbers::pi_v<long double>));
}

CorrelationResult kernel_matrix(const std::vector<cplx>& points, const KernelParams& params) {
  params.validate();
  check_size(points.size(), "kernel_matrix");
  const auto n = static_cast<Eigen::Index>(points.size());

  std::vector<ScaledComplex> entries(static_cast<std::size_t>(n * n));
  double top = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const ScaledComplex v = kernel(points[i], points[j], params);
      entries[i * n + j] = v;
      entries[j * n + i] = v.conj();
    }
    top = std::max(top, entries[i * n + i].log_abs());
  }
  if (!std::isfinite(top)) top = 0.0;

  CorrelationResult out;
  out.points = points;
  out.matrix_log_scale = top;
  out.matrix_significand.resize(n, n);
  const ScaledComplex unscale = ScaledComplex::from_log_polar(-top, 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out.matrix_significand(i, j) = (entries[i * n + j] * unscale).value();
    }
  }
  out.det_value = det_scaled(out.matrix_significand, top);
  return out;
}

std::vector<cplx> scaled_points(cplx r, const std::vector<cplx>& offsets,
                                const KernelParams& params) {
  params.validate();
  const double edge = support_radius(params.alpha);
  const double m = std::abs(r);
  if (!(m > 0) || !(m < edge - 1e-3)) {
    throw DomainError("scaled_points: r must lie inside the open support, 1e-3 away from its edge");
  }
  const ScaledComplex diag = kernel(r, r, params);
  // 1 / sqrt(pi K(r, r))
  const double step = std::exp(-0.5 * (std::log(kPi) + diag.log_abs()));
  std::vector<cplx> out;
  out.reserve(offsets.size());
  for (cplx z : offsets) out.push_back(r + z * step);
  return out;
}

ScalingLimit scaling_limit_check(cplx r, const std::vector<cplx>& offsets,
                                 const KernelParams& params) {
  check_size(offsets.size(), "scaling_limit_check");
  const std::vector<cplx> pts = scaled_points(r, offsets, params);
  const CorrelationResult km = kernel_matrix(pts, params);
  const double log_norm =
      static_cast<double>(offsets.size()) * (std::log(kPi) + kernel(r, r, params).log_abs());

  ScalingLimit out;
  const ScaledComplex ratio = km.det_value / ScaledComplex::from_log_polar(log_norm, 0);
  out.measured = ratio.value().real();
  out.predicted = det_scaled(segal_bargmann_matrix(offsets)).value().real();
  return out;
}

double two_point_limit(cplx z1, cplx z2) noexcept {
  return -std::expm1(-std::norm(z1 - z2)) / (kPi * kPi);
}

double gauge_check(cplx r, const std::vector<cplx>& offsets, const KernelParams& params) {
  params.validate();
  check_size(offsets.size(), "gauge_check");
  const double alpha = params.alpha;
  const double n = params.n;
  const double edge = support_radius(alpha);
  const double m = std::abs(r);
  if (!(m > 0) || !(m < edge - 1e-3)) {
    throw DomainError("gauge_check: r must lie inside the open support, 1e-3 away from its edge");
  }

  // Large-N gate on all pairwise products of the rescaled points.
  const std::vector<cplx> pts = scaled_points(r, offsets, params);
  double smallest = std::numeric_limits<double>::infinity();
  for (cplx a : pts) {
    for (cplx b : pts) smallest = std::min(smallest, std::abs(a * std::conj(b)));
  }
  constexpr double k_const = 10.0;
  if (!(smallest > 0) || !(n > std::pow(k_const / smallest, alpha / 2))) {
    throw DomainError("gauge_check: N below the large-N gate");
  }

  const auto size = static_cast<Eigen::Index>(offsets.size());
  std::vector<double> lambda(offsets.size());
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const cplx u = offsets[i] / r;
    lambda[i] = std::pow(m, alpha / 2 + 1) * u.imag() +
                0.5 / std::sqrt(n) * m * m * (1 - 2 / alpha) * (u * u).imag();
  }

  Eigen::MatrixXcd c(size, size);
  Eigen::MatrixXcd d(size, size);
  const double root_n = std::sqrt(n);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      const cplx zi = offsets[i];
      const cplx zj = offsets[j];
      const cplx a = zi * std::conj(zj) - 0.5 * std::norm(zi) - 0.5 * std::norm(zj);
      d(i, j) = std::exp(a) / kPi;
      c(i, j) = std::exp(a + cplx(0, root_n * (lambda[i] - lambda[j]))) / kPi;
    }
  }
  const ScaledComplex det_d = det_scaled(d);
  if (det_d.is_zero()) throw DomainError("gauge_check: degenerate configuration, det D = 0");
  const ScaledComplex diff = det_scaled(c) - det_d;
  return diff.is_zero() ? 0.0 : std::exp(diff.log_abs() - det_d.log_abs());
}

}  // namespace nk
