#include "nk/euler_maclaurin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "nk/specfun.hpp"
#include "quadrature.hpp"

namespace nk {
namespace {

using cplx = std::complex<double>;
using cld = std::complex<long double>;

// The Kronrod estimate is pessimistic on short panels and never meets the
// tolerance there, so recursion is capped and the error is measured as the
// change when the interval is split in two.
double interval_integral(const RealFunction& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  constexpr unsigned depth = 5;
  const double whole = detail::adaptive(f, lo, hi, 1e-14, depth).value;
  const double halves = detail::adaptive(f, lo, mid, 1e-14, depth).value +
                        detail::adaptive(f, mid, hi, 1e-14, depth).value;
  const double error = std::abs(whole - halves);
  if (!std::isfinite(whole) || error > 1e-12) {
    throw NumericalError("trapezoid_error: quadrature above 1e-12 absolute", error);
  }
  return halves;
}

// Leftmost t in [lo, hi] with f(t) = target for convex f.
double mean_value_point(const RealFunction& f, double lo, double hi, double target) {
  // Golden-section search for the minimizer.
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > 1e-13 * std::max(1.0, std::abs(a) + std::abs(b))) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double x_min = 0.5 * (a + b);
  double f_min = f(x_min);
  for (double x : {lo, hi}) {
    if (f(x) < f_min) {
      x_min = x;
      f_min = f(x);
    }
  }

  const double scale = std::max({std::abs(f(lo)), std::abs(f(hi)), std::abs(target), 1.0});
  const double slack = 1e-10 * scale;
  if (target < f_min - slack) {
    throw ContractViolation("convex_error_bound: mean lies below the minimum; f is not convex");
  }
  if (target <= f_min) return x_min;

  // f decreases on [lo, x_min] and increases on [x_min, hi].
  auto bisect = [&](double left, double right, bool decreasing) {
    for (int i = 0; i < 200 && right - left > 0; ++i) {
      const double mid = 0.5 * (left + right);
      if (mid <= left || mid >= right) break;
      const bool above = f(mid) > target;
      ((above == decreasing) ? left : right) = mid;
    }
    const double t = 0.5 * (left + right);
    // A jump can stop the bisection without f ever reaching the mean.
    if (std::abs(f(t) - target) > slack) {
      throw ContractViolation("convex_error_bound: f does not attain its mean; f is not convex");
    }
    return t;
  };
  if (f(lo) >= target) return bisect(lo, x_min, true);
  if (f(hi) >= target - slack) return bisect(x_min, hi, false);
  throw ContractViolation("convex_error_bound: no mean-value point; f is not convex");
}

}  // namespace

void PartitionSpec::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw DomainError("PartitionSpec: requires finite a < b");
  }
  if (k < 1) throw DomainError("PartitionSpec: requires k >= 1");
}

double trapezoid_error(const RealFunction& f, const PartitionSpec& p) {
  p.validate();
  const double h = p.spacing();
  double total = 0.0;
  for (int j = 0; j < p.k; ++j) {
    const double lo = p.node(j);
    const double hi = p.node(j + 1);
    total += interval_integral(f, lo, hi) - 0.5 * h * (f(lo) + f(hi));
  }
  return total;
}

TrapezoidBound convex_error_bound(const RealFunction& f, const PartitionSpec& p) {
  p.validate();
  const double h = p.spacing();
  const double first_mean = interval_integral(f, p.node(0), p.node(1)) / h;
  const double last_mean = interval_integral(f, p.node(p.k - 1), p.node(p.k)) / h;

  TrapezoidBound out;
  out.t_first = mean_value_point(f, p.node(0), p.node(1), first_mean);
  out.t_last = mean_value_point(f, p.node(p.k - 1), p.node(p.k), last_mean);
  const double head = std::max(f(p.node(0)), f(p.node(1)));
  out.lower = -0.5 * h * (head - first_mean + f(p.node(p.k)) - last_mean);
  out.upper = 0.0;
  return out;
}

TrapezoidBound concave_error_bound(const RealFunction& f, const PartitionSpec& p) {
  const RealFunction neg = [&f](double x) { return -f(x); };
  const TrapezoidBound mirrored = convex_error_bound(neg, p);
  TrapezoidBound out;
  out.lower = 0.0;
  out.upper = -mirrored.lower;
  out.t_first = mirrored.t_first;
  out.t_last = mirrored.t_last;
  return out;
}

EmDecomposition em_decompose(const SummandContext& ctx) {
  ctx.validate();
  if (std::abs(ctx.zeta) < 1e-6) throw DomainError("em_decompose: requires |zeta| >= 1e-6");

  const int n = ctx.n;
  const long double a = ctx.alpha;
  const long double base = 2.0L * ctx.delta / a * std::log(static_cast<long double>(n)) +
                           std::log(std::abs(cld(ctx.zeta)));
  const long double arg = std::arg(cld(ctx.zeta));
  auto log_g = [&](long double x) { return x * base - log_gamma(2.0L * x / a); };

  EmDecomposition out;
  out.direct_sum = summand_sum(ctx);
  out.r1 = (g_eval(1.0, ctx) + g_eval(n, ctx)) / ScaledComplex::from_complex(2.0);

  // Remainder r2: per unit interval, with g(j + 1/2) factored out.
  std::vector<LogTermL> pieces;
  pieces.reserve(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int j = 1; j < n; ++j) {
    const long double mid = j + 0.5L;
    const long double log_mid = log_g(mid);
    auto profile = [&](double t) {
      const long double x = j + static_cast<long double>(t);
      const long double re = log_g(x) - log_mid;
      const long double im = (t - 0.5L) * arg;
      return cplx(std::polar(std::exp(re), im));
    };
    const cplx local = detail::gauss20(profile, 0.0, 1.0) - 0.5 * (profile(0.0) + profile(1.0));
    const double m = std::abs(local);
    pieces.push_back({m > 0 ? log_mid + std::log(static_cast<long double>(m))
                            : -std::numeric_limits<long double>::infinity(),
                      mid * arg + std::arg(local)});
  }
  out.r2 = -scaled_sum(std::span<const LogTermL>(pieces));

  // Integral over [1, N], scaled by the largest |g(j)| and split around the peak.
  long double top = -std::numeric_limits<long double>::infinity();
  for (int j = 1; j <= n; ++j) top = std::max(top, log_g(j));
  auto scaled = [&](double x) {
    const long double xl = x;
    return cplx(std::polar(std::exp(log_g(xl) - top), xl * arg));
  };
  std::vector<double> cuts{1.0, static_cast<double>(n)};
  SummandContext abs_ctx = ctx;
  abs_ctx.zeta = std::abs(ctx.zeta);
  const double xs = find_xstar(abs_ctx);
  const double sigma = std::sqrt(ctx.alpha * std::max(xs, 1.0) / 2);
  for (double m : {-10.0, -3.0, 0.0, 3.0, 10.0}) {
    const double c = xs + m * sigma;
    if (c > 1.0 && c < n) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  cplx integral{};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] <= cuts[i]) continue;
    const detail::Quadrature re = detail::adaptive(
        [&](double x) { return scaled(x).real(); }, cuts[i], cuts[i + 1], 1e-13);
    const detail::Quadrature im = detail::adaptive(
        [&](double x) { return scaled(x).imag(); }, cuts[i], cuts[i + 1], 1e-13);
    integral += cplx(re.value, im.value);
  }
  out.integral = ScaledComplex(top, integral);

  const ScaledComplex norm =
      ScaledComplex::from_log_polar(ctx.delta / 2 * std::log(static_cast<long double>(n)), 0) *
      g_eval(xs, abs_ctx);
  out.r1_hat = (out.r1 / norm).value();
  out.r2_hat = (out.r2 / norm).value();

  const ScaledComplex diff = out.integral + out.r1 + out.r2 - out.direct_sum;
  out.recombination_residual =
      diff.is_zero() ? 0.0 : std::exp(diff.log_abs() - out.direct_sum.log_abs());
  if (!(out.recombination_residual <= 1e-9)) {
    throw ConsistencyError("em_decompose: recombination residual " +
                           std::to_string(out.recombination_residual) + " above 1e-9");
  }
  return out;
}

}  // namespace nk
