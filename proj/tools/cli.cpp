#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <memory>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "nk/nk.hpp"

namespace nk::cli {
namespace {

using cplx = std::complex<double>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_double(std::string_view s, const std::string& flag) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(v)) {
    throw UsageError(fmt::format("{}: '{}' is not a finite number", flag, s));
  }
  return v;
}

cplx parse_complex(std::string_view s, const std::string& flag) {
  const auto comma = s.find(',');
  if (comma == std::string_view::npos || s.find(',', comma + 1) != std::string_view::npos) {
    throw UsageError(fmt::format("{}: expected RE,IM but got '{}'", flag, s));
  }
  return {parse_double(s.substr(0, comma), flag), parse_double(s.substr(comma + 1), flag)};
}

std::vector<cplx> parse_offsets(std::string_view s, const std::string& flag) {
  std::vector<cplx> out;
  while (true) {
    const auto semi = s.find(';');
    const auto item = s.substr(0, semi);
    if (!item.empty()) out.push_back(parse_complex(item, flag));
    if (semi == std::string_view::npos) break;
    s.remove_prefix(semi + 1);
  }
  if (out.empty()) throw UsageError(flag + ": at least one offset required");
  return out;
}

std::vector<int> parse_int_list(std::string_view s, const std::string& flag) {
  std::vector<int> out;
  while (true) {
    const auto comma = s.find(',');
    const auto item = s.substr(0, comma);
    int v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || end != item.data() + item.size() || v < 1) {
      throw UsageError(fmt::format("{}: '{}' is not a positive integer", flag, item));
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

// 17 significant digits, so every value round-trips. JSON has no NaN.
std::string num(double v) {
  if (!std::isfinite(v)) return "null";
  return fmt::format("{:.17g}", v);
}

std::string complex_json(cplx v) {
  return fmt::format("{{\"re\": {}, \"im\": {}}}", num(v.real()), num(v.imag()));
}

// Plain value with log_scale 0 when it fits a double, canonical form otherwise.
std::string scaled_json(const ScaledComplex& v) {
  if (v.fits_double()) {
    const cplx x = v.value();
    return fmt::format("{{\"log_scale\": 0, \"re\": {}, \"im\": {}}}", num(x.real()), num(x.imag()));
  }
  const cplx s = v.significand();
  return fmt::format("{{\"log_scale\": {}, \"re\": {}, \"im\": {}}}", num(v.log_scale()),
                     num(s.real()), num(s.imag()));
}

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto log = std::make_shared<spdlog::logger>("nk", sink);
  log->set_pattern("[%l] %v");
  const char* env = std::getenv("NK_LOG");
  const std::string level = env ? env : "off";
  if (level == "debug") {
    log->set_level(spdlog::level::debug);
  } else if (level == "info") {
    log->set_level(spdlog::level::info);
  } else {
    log->set_level(spdlog::level::off);
  }
  return log;
}

struct Flags {
  double alpha = 2.0;
  int n = 1;
  double delta = 1.0;
  std::string z, w, zeta, r, offsets, n_list;
  bool asymptotic = false;
  double rmax = 1.0;
  int points = 50;
  double zeta_abs = 1.0;
  int trials = 1;
  std::uint64_t seed = 0;
  int bins = 20;
  double a = 0.5;
  int tau_steps = 17;
};

KernelParams kernel_params(const Flags& f) {
  KernelParams p{f.alpha, f.n};
  p.validate();
  return p;
}

SummandContext summand_context(const Flags& f, cplx zeta) {
  SummandContext c;
  c.alpha = f.alpha;
  c.delta = f.delta;
  c.n = f.n;
  c.zeta = zeta;
  c.validate();
  return c;
}

void run_kernel(const Flags& f, std::ostream& out) {
  const KernelParams p = kernel_params(f);
  const cplx z = parse_complex(f.z, "--z");
  const cplx w = parse_complex(f.w, "--w");
  ScaledComplex v;
  if (f.asymptotic) {
    v = asymptotic_kernel(z, w, p, f.delta);
  } else {
    const double shrink = std::pow(static_cast<double>(f.n), -(1.0 - f.delta) / f.alpha);
    v = kernel(z * shrink, w * shrink, p);
  }
  out << scaled_json(v) << '\n';
}

void run_density(const Flags& f, std::ostream& out) {
  const KernelParams p = kernel_params(f);
  if (f.points < 1) throw UsageError("--points must be >= 1");
  if (!(f.rmax > 0)) throw UsageError("--rmax must be > 0");
  out << "r,exact_density,limit_density\n";
  for (int i = 0; i < f.points; ++i) {
    const double r = f.rmax * (i + 1) / f.points;
    out << num(r) << ',' << num(density_exact(r, p)) << ',' << num(density_limit(r, f.alpha))
        << '\n';
  }
}

void run_error_scaling(const Flags& f, std::ostream& out, spdlog::logger& log) {
  const cplx zeta = parse_complex(f.zeta, "--zeta");
  const std::vector<int> ns = parse_int_list(f.n_list, "--n-list");
  // Z conj(W) = zeta with Z = sqrt(zeta), W = conj(Z).
  const cplx z = std::sqrt(zeta);
  const cplx w = std::conj(z);
  std::vector<double> xs, ys;
  out << "N,abs_E\n";
  for (int n : ns) {
    const double e = std::abs(error_ratio(z, w, KernelParams{f.alpha, n}, f.delta));
    log.debug("N={} |E|={}", n, e);
    out << n << ',' << num(e) << '\n';
    xs.push_back(n);
    ys.push_back(e);
  }
  double slope = std::nan("");
  try {
    slope = loglog_slope(xs, ys);
  } catch (const DomainError& e) {
    log.warn("slope undefined: {}", e.what());
  }
  out << fmt::format("{{\"slope\": {}}}\n", num(slope));
}

void run_correlate(const Flags& f, std::ostream& out) {
  const KernelParams p = kernel_params(f);
  const cplx r = parse_complex(f.r, "--r");
  const std::vector<cplx> offsets = parse_offsets(f.offsets, "--offsets");
  const ScalingLimit s = scaling_limit_check(r, offsets, p);
  const double g = gauge_check(r, offsets, p);
  out << fmt::format("{{\"measured\": {}, \"predicted\": {}, \"gauge_residual\": {}}}\n",
                     num(s.measured), num(s.predicted), num(g));
}

void run_xstar(const Flags& f, std::ostream& out) {
  const SummandContext c = summand_context(f, f.zeta_abs);
  const double x = find_xstar(c);
  out << fmt::format("{{\"xstar_root\": {}, \"xstar_asymptotic\": {}, \"residual\": {}}}\n",
                     num(x), num(xstar_asymptotic(c)), num(std::abs(xstar_residual(x, c))));
}

void run_em(const Flags& f, std::ostream& out) {
  const SummandContext c = summand_context(f, parse_complex(f.zeta, "--zeta"));
  const EmDecomposition d = em_decompose(c);
  out << fmt::format("{{\"r1_hat\": {}, \"r2_hat\": {}, \"recombination_residual\": {}}}\n",
                     complex_json(d.r1_hat), complex_json(d.r2_hat),
                     num(d.recombination_residual));
}

void run_sample(const Flags& f, std::ostream& out, spdlog::logger& log) {
  const KernelParams p = kernel_params(f);
  if (f.trials < 1) throw UsageError("--trials must be >= 1");
  std::vector<RadialSample> pool;
  pool.reserve(static_cast<std::size_t>(f.trials));
  for (int t = 0; t < f.trials; ++t) pool.push_back(sample_radii(p, f.seed + t));
  const RadialHistogram h = empirical_radial_density(pool, f.bins);
  log.info("pooled KS distance {}", ks_distance(pool));
  out << "r_lo,r_hi,observed,predicted\n";
  for (std::size_t i = 0; i < h.observed.size(); ++i) {
    out << num(h.edges[i]) << ',' << num(h.edges[i + 1]) << ',' << num(h.observed[i]) << ','
        << num(h.predicted[i]) << '\n';
  }
}

void run_kcurve(const Flags& f, std::ostream& out) {
  if (f.tau_steps < 1) throw UsageError("--tau-steps must be >= 1");
  out << "tau,K\n";
  for (int i = 0; i < f.tau_steps; ++i) {
    const double tau =
        f.tau_steps == 1 ? 0.0 : 2 * std::numbers::pi * i / (f.tau_steps - 1);
    out << num(tau) << ',' << num(sector_radius(f.a, tau)) << '\n';
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto log = make_logger(err);
  Flags f;
  CLI::App app{"Exact and asymptotic kernels of radial normal matrix ensembles", "nk"};
  app.require_subcommand(1);

  auto* kernel = app.add_subcommand("kernel", "Exact or asymptotic kernel value as JSON");
  kernel->add_option("--alpha", f.alpha)->required();
  kernel->add_option("--n", f.n)->required();
  kernel->add_option("--delta", f.delta);
  kernel->add_option("--z", f.z, "RE,IM")->required();
  kernel->add_option("--w", f.w, "RE,IM")->required();
  kernel->add_flag("--asymptotic", f.asymptotic);

  auto* density = app.add_subcommand("density", "Exact vs. limiting density along the real axis");
  density->add_option("--alpha", f.alpha)->required();
  density->add_option("--n", f.n)->required();
  density->add_option("--rmax", f.rmax)->required();
  density->add_option("--points", f.points)->required();

  auto* scaling = app.add_subcommand("error-scaling", "|exact/asymptotic - 1| over a list of N");
  scaling->add_option("--alpha", f.alpha)->required();
  scaling->add_option("--zeta", f.zeta, "RE,IM")->required();
  scaling->add_option("--n-list", f.n_list, "N1,N2,...")->required();
  scaling->add_option("--delta", f.delta);

  auto* correlate = app.add_subcommand("correlate", "n-point scaling limit and gauge residual");
  correlate->add_option("--alpha", f.alpha)->required();
  correlate->add_option("--n", f.n)->required();
  correlate->add_option("--r", f.r, "RE,IM")->required();
  correlate->add_option("--offsets", f.offsets, "RE,IM;RE,IM;...")->required();

  auto* xstar = app.add_subcommand("xstar", "Maximizer of the kernel summand");
  xstar->add_option("--alpha", f.alpha)->required();
  xstar->add_option("--delta", f.delta)->required();
  xstar->add_option("--zeta-abs", f.zeta_abs)->required();
  xstar->add_option("--n", f.n)->required();

  auto* em = app.add_subcommand("em", "Euler-Maclaurin remainders of the summand sum");
  em->add_option("--alpha", f.alpha)->required();
  em->add_option("--delta", f.delta)->required();
  em->add_option("--zeta", f.zeta, "RE,IM")->required();
  em->add_option("--n", f.n)->required();

  auto* sample = app.add_subcommand("sample", "Histogram of sampled eigenvalue moduli");
  sample->add_option("--alpha", f.alpha)->required();
  sample->add_option("--n", f.n)->required();
  sample->add_option("--trials", f.trials)->required();
  sample->add_option("--seed", f.seed)->required();
  sample->add_option("--bins", f.bins)->required();

  auto* kcurve = app.add_subcommand("kcurve", "Sector radius K(a, tau) over tau in [0, 2 pi]");
  kcurve->add_option("--a", f.a);
  kcurve->add_option("--tau-steps", f.tau_steps)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (*kernel) run_kernel(f, out);
    else if (*density) run_density(f, out);
    else if (*scaling) run_error_scaling(f, out, *log);
    else if (*correlate) run_correlate(f, out);
    else if (*xstar) run_xstar(f, out);
    else if (*em) run_em(f, out);
    else if (*sample) run_sample(f, out, *log);
    else if (*kcurve) run_kcurve(f, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  out.flush();
  return kExitOk;
}

}  // namespace nk::cli
