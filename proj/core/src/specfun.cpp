#include "nk/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace nk {
namespace {

// zeta(k)/k for k = 2..36: ln Gamma(1+e) = -gamma_E e + sum (-1)^k zeta(k)/k e^k.
constexpr std::array<long double, 35> kZetaOverK = {
    0.8224670334241132182362076L,  0.4006856343865314284665794L,
    0.2705808084277845478790009L,  0.2073855510286739852662731L,
    0.1695571769974081899524197L,  0.1440498967688461181199711L,
    0.1255096695247430424223357L,  0.1113342658695646904908725L,
    0.1000994575127818085337146L,  0.0909540171458290422326093L,
    0.0833538405461090040248865L,  0.07693251641135219147282706L,
    0.07143294629536133605923275L, 0.06666870588242046803290345L,
    0.06250095514121304074198329L, 0.05882397865868458233895727L,
    0.05555576762740361110221425L, 0.05263167937961666073362767L,
    0.05000004769810169363980566L, 0.04761907033014222799078396L,
    0.04545455629320466944240864L, 0.043478266053040259361351L,
    0.04166666915034121046914498L, 0.04000000119214014058609121L,
    0.03846153903467518570634774L, 0.03703703731298932554946035L,
    0.03571428584733335802815918L, 0.03448275868491930081079479L,
    0.03333333336437758108065561L, 0.03225806453115041633881866L,
    0.03125000000727597448023908L, 0.03030303030655804550687895L,
    0.02941176470759434473173609L, 0.02857142857226011001271346L,
    0.02777777777818199783030672L,
};

// psi^(k)(x0)/k! for k = 1..30, x0 the positive root of psi.
constexpr std::array<long double, 30> kPsiTaylor = {
    0.9676722454476211704274448L,       -0.4427631689835921060928653L,
    0.2584997609556510106244014L,       -0.1639427054424065275042513L,
    0.1078240506912623657571829L,       -0.07219956125645471092612178L,
    0.04880428816414310722509253L,      -0.0331611264748473592922584L,
    0.02259764823221810465962483L,      -0.01542476590494895913880032L,
    0.01053879161661217538812405L,      -0.007204534386356868240970474L,
    0.004926781395729853446354266L,     -0.003369801655439328082792857L,
    0.00230512632673492783693838L,      -0.001576936771430197259270935L,
    0.001078825201916296580691918L,     -0.0007380709389960051295660474L,
    0.0005049532658346020351773982L,    -0.000345468025106307699555568L,
    0.000236356015640270527923696L,     -0.0001617062209197480344935831L,
    0.0001106337276874741090408716L,    -0.00007569179582195065919237709L,
    0.00005178575795222080868993268L,   -0.00003543007094765960631569882L,
    0.00002424006611860131765268307L,   -0.00001658424227185413337524254L,
    0.00001134638458466384980670156L,   -0.000007762817668462094425267736L,
};

// B_{2k} for k = 1..11.
constexpr std::array<long double, 11> kBernoulli = {
    1.0L / 6,      -1.0L / 30, 1.0L / 42,        -1.0L / 30,
    5.0L / 66,     -691.0L / 2730, 7.0L / 6,     -3617.0L / 510,
    43867.0L / 798, -174611.0L / 330, 854513.0L / 138,
};

constexpr long double kEulerGamma = 0.5772156649015328606065121L;
constexpr long double kHalfLog2Pi = 0.9189385332046727417803297L;

template <class T>
struct Shift;
template <>
struct Shift<double> {
  static constexpr double threshold = 10.0;
  static constexpr int stirling_terms = 8;
  // Root of psi as head + tail.
  static constexpr double root_hi = 1.4616321449683622;
  static constexpr double root_lo = 9.5499954299656977e-17;
};
template <>
struct Shift<long double> {
  static constexpr long double threshold = 16.0L;
  static constexpr int stirling_terms = 11;
  static constexpr long double root_hi = 1.46163214496836234126265954233L;
  static constexpr long double root_lo = -1.8257096315963484e-20L;
};

template <class T>
void check_positive(T x, const char* who) {
  if (!(x > 0) || !std::isfinite(x)) throw DomainError(std::string(who) + ": requires finite x > 0");
}

// ln Gamma(1+e) for |e| <= 1/4.
template <class T>
T log_gamma_1p(T e) {
  T acc = 0;
  T p = e * e;
  for (std::size_t i = 0; i < kZetaOverK.size(); ++i) {
    const T term = static_cast<T>(kZetaOverK[i]) * p;
    acc += (i % 2 == 0) ? term : -term;
    p *= e;
  }
  return acc - static_cast<T>(kEulerGamma) * e;
}

template <class T>
T stirling(T x) {
  const T inv = 1 / x;
  const T inv2 = inv * inv;
  T series = 0;
  T p = inv;
  for (int k = 1; k <= Shift<T>::stirling_terms; ++k) {
    series += static_cast<T>(kBernoulli[k - 1]) / (2 * k * (2 * k - 1)) * p;
    p *= inv2;
  }
  return (x - T(0.5)) * std::log(x) - x + static_cast<T>(kHalfLog2Pi) + series;
}

template <class T>
T log_gamma_impl(T x) {
  check_positive(x, "log_gamma");
  if (std::abs(x - 1) <= T(0.25)) return log_gamma_1p(x - 1);
  if (std::abs(x - 2) <= T(0.25)) {
    const T e = x - 2;
    return log_gamma_1p(e) + std::log1p(e);
  }
  if (x < T(0.25)) return log_gamma_1p(x) - std::log(x);
  if (x >= Shift<T>::threshold) return stirling(x);

  // Gamma(x) = Gamma(x+n) / (x (x+1) ... (x+n-1))
  T prod = 1;
  T y = x;
  while (y < Shift<T>::threshold) {
    prod *= y;
    y += 1;
  }
  return stirling(y) - std::log(prod);
}

template <class T>
T digamma_impl(T x) {
  check_positive(x, "digamma");
  const T d = (x - Shift<T>::root_hi) - Shift<T>::root_lo;
  if (std::abs(d) <= T(0.25)) {
    T acc = 0;
    for (auto it = kPsiTaylor.rbegin(); it != kPsiTaylor.rend(); ++it) {
      acc = acc * d + static_cast<T>(*it);
    }
    return acc * d;
  }

  T shift = 0;
  T y = x;
  while (y < Shift<T>::threshold) {
    shift -= 1 / y;
    y += 1;
  }
  const T inv2 = 1 / (y * y);
  T series = 0;
  T p = inv2;
  for (int k = 1; k <= Shift<T>::stirling_terms; ++k) {
    series += static_cast<T>(kBernoulli[k - 1]) / (2 * k) * p;
    p *= inv2;
  }
  return shift + std::log(y) - 1 / (2 * y) - series;
}

template <class T>
ScaledComplex scaled_sum_impl(std::span<const BasicLogTerm<T>> terms) {
  T top = -std::numeric_limits<T>::infinity();
  for (const auto& t : terms) {
    if (std::isnan(t.log_modulus) || std::isnan(t.phase)) {
      throw DomainError("scaled_sum: NaN term");
    }
    if (t.log_modulus == std::numeric_limits<T>::infinity() || !std::isfinite(t.phase)) {
      throw DomainError("scaled_sum: infinite term");
    }
    top = std::max(top, t.log_modulus);
  }
  if (top == -std::numeric_limits<T>::infinity()) return {};

  std::complex<long double> acc{};
  long double l1 = 0;
  for (const auto& t : terms) {
    if (t.log_modulus == -std::numeric_limits<T>::infinity()) continue;
    const long double m = std::exp(static_cast<long double>(t.log_modulus - top));
    acc += std::polar(m, static_cast<long double>(t.phase));
    l1 += m;
  }
  // Anything below the rounding noise of the inputs is an exact cancellation.
  constexpr long double noise = 4 * std::numeric_limits<T>::epsilon();
  if (std::abs(acc) <= noise * l1) return {};
  return ScaledComplex(static_cast<long double>(top), acc);
}

}  // namespace

double log_gamma(double x) { return log_gamma_impl(x); }
long double log_gamma(long double x) { return log_gamma_impl(x); }

double digamma(double x) { return digamma_impl(x); }
long double digamma(long double x) { return digamma_impl(x); }

ScaledComplex scaled_sum(std::span<const LogTerm> terms) { return scaled_sum_impl(terms); }
ScaledComplex scaled_sum(std::span<const LogTermL> terms) { return scaled_sum_impl(terms); }

}  // namespace nk
