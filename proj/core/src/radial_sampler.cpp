#include "nk/radial_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "nk/asymptotic.hpp"

namespace nk {
namespace {

class Draws {
 public:
  explicit Draws(std::uint64_t seed) : engine_(seed) {}

  // Uniform on (0, 1) with 53 random bits.
  double uniform() {
    for (;;) {
      const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
      if (u > 0) return u;
    }
  }

  // Marsaglia polar method.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    for (;;) {
      const double u = 2 * uniform() - 1;
      const double v = 2 * uniform() - 1;
      const double s = u * u + v * v;
      if (s > 0 && s < 1) {
        const double f = std::sqrt(-2 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
      }
    }
  }

  // Gamma(shape, 1) by Marsaglia-Tsang squeeze; shape < 1 is boosted through
  // Gamma(shape + 1) * U^(1/shape).
  double gamma(double shape) {
    if (shape < 1) return gamma(shape + 1) * std::pow(uniform(), 1 / shape);
    const double d = shape - 1.0 / 3;
    const double c = 1 / std::sqrt(9 * d);
    for (;;) {
      double x;
      double v;
      do {
        x = normal();
        v = 1 + c * x;
      } while (v <= 0);
      v = v * v * v;
      const double u = uniform();
      const double x2 = x * x;
      if (u < 1 - 0.0331 * x2 * x2) return d * v;
      if (std::log(u) < 0.5 * x2 + d * (1 - v + std::log(v))) return d * v;
    }
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace

RadialSample sample_radii(const KernelParams& params, std::uint64_t seed) {
  params.validate();
  RadialSample out;
  out.seed = seed;
  out.params = params;
  out.radii.resize(static_cast<std::size_t>(params.n));
  Draws draws(seed);
  const double rate = params.n;
  for (int j = 1; j <= params.n; ++j) {
    const double g = draws.gamma(2.0 * j / params.alpha) / rate;
    out.radii[j - 1] = std::pow(g, 1 / params.alpha);
  }
  return out;
}

double limit_radial_cdf(double r, double alpha) {
  if (r <= 0) return 0.0;
  if (r >= support_radius(alpha)) return 1.0;
  return std::min(alpha / 2 * std::pow(r, alpha), 1.0);
}

RadialHistogram empirical_radial_density(const std::vector<RadialSample>& pool, int bins) {
  if (pool.empty()) throw DomainError("empirical_radial_density: empty pool");
  if (bins < 4) throw DomainError("empirical_radial_density: bins must be >= 4");
  const KernelParams p = pool.front().params;
  for (const auto& s : pool) {
    if (s.params.alpha != p.alpha || s.params.n != p.n) {
      throw DomainError("empirical_radial_density: samples with different params");
    }
  }

  const double top = 1.2 * support_radius(p.alpha);
  const double width = top / bins;
  RadialHistogram h;
  h.edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i) h.edges[i] = i * width;
  h.observed.assign(static_cast<std::size_t>(bins), 0.0);
  h.predicted.resize(static_cast<std::size_t>(bins));

  for (const auto& s : pool) {
    for (double r : s.radii) {
      const auto i = static_cast<long>(r / width);
      if (i >= 0 && i < bins) h.observed[i] += 1;
    }
  }
  const double total = static_cast<double>(p.n) * static_cast<double>(pool.size());
  for (int i = 0; i < bins; ++i) {
    h.predicted[i] =
        total * (limit_radial_cdf(h.edges[i + 1], p.alpha) - limit_radial_cdf(h.edges[i], p.alpha));
  }
  return h;
}

double ks_distance(const std::vector<RadialSample>& pool) {
  if (pool.empty()) throw DomainError("ks_distance: empty pool");
  const double alpha = pool.front().params.alpha;
  std::vector<double> all;
  for (const auto& s : pool) all.insert(all.end(), s.radii.begin(), s.radii.end());
  std::sort(all.begin(), all.end());
  const double m = static_cast<double>(all.size());
  double d = 0.0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const double f = limit_radial_cdf(all[i], alpha);
    d = std::max({d, (i + 1) / m - f, f - i / m});
  }
  return d;
}

}  // namespace nk
