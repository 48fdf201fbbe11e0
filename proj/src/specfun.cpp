#include "pointint/specfun.hpp"

#include <cmath>
#include <limits>
#include <type_traits>

#include "pointint/errors.hpp"

namespace pointint::specfun {

namespace {

constexpr long double kEulerGammaL = 0.577215664901532860606512090082402431L;
constexpr long double kPiL = 3.14159265358979323846264338327950288L;

// Series and continued fractions run one precision level above the caller.
template <typename T> struct Widen { using type = long double; };
template <> struct Widen<Complex> { using type = std::complex<long double>; };
template <typename T> using widen_t = typename Widen<T>::type;

template <typename W> W narrow_to(const widen_t<W>& value) {
  if constexpr (std::is_same_v<W, double>) {
    return static_cast<double>(value);
  } else {
    return Complex(static_cast<double>(value.real()), static_cast<double>(value.imag()));
  }
}

template <typename T> widen_t<T> widen(const T& value) {
  if constexpr (std::is_same_v<T, double>) {
    return static_cast<long double>(value);
  } else {
    return {static_cast<long double>(value.real()), static_cast<long double>(value.imag())};
  }
}

template <typename T> T dispatch_k0(T zeta) {
  const double r = std::abs(zeta);
  if (r <= detail::kSeriesRadius) return detail::k0_series(zeta);
  if (r <= detail::kAsymptoticRadius) return detail::k0_continued_fraction(zeta);
  return detail::k0_asymptotic(zeta);
}

}  // namespace

namespace detail {

template <typename T> T k0_series(T zeta) {
  using W = widen_t<T>;
  const W z = widen(zeta);
  const W q = z * z / 4.0L;
  W term = 1.0L;
  W i0 = 1.0L;
  W sum = 0.0L;
  long double harmonic = 0.0L;
  for (int k = 1; k < 400; ++k) {
    term *= q / static_cast<long double>(k * k);
    harmonic += 1.0L / k;
    i0 += term;
    sum += harmonic * term;
    if (std::abs(term) * (1.0L + harmonic) < 1e-21L * std::abs(i0)) break;
  }
  const W value = -(std::log(z / 2.0L) + kEulerGammaL) * i0 + sum;
  return narrow_to<T>(value);
}

// Steed's algorithm for the second continued fraction with Temme's
// normalization sum (order zero). Converges for |zeta| >~ 2, Re zeta >= 0.
template <typename T> T k0_continued_fraction(T zeta) {
  using W = widen_t<T>;
  const W x = widen(zeta);
  constexpr long double eps = 1e-19L;
  W b = 2.0L * (1.0L + x);
  W d = 1.0L / b;
  W h = d;
  W delh = d;
  W q1 = 0.0L;
  W q2 = 1.0L;
  const long double a1 = 0.25L;
  W q = a1;
  W c = a1;
  long double a = -a1;
  W s = 1.0L + q * delh;
  for (int i = 2; i < 20000; ++i) {
    a -= 2.0L * (i - 1);
    c = -a * c / static_cast<long double>(i);
    const W qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0L;
    d = 1.0L / (b + a * d);
    delh = (b * d - 1.0L) * delh;
    h += delh;
    const W dels = q * delh;
    s += dels;
    if (std::abs(dels) < eps * std::abs(s)) break;
  }
  const W value = std::sqrt(kPiL / (2.0L * x)) * std::exp(-x) / s;
  return narrow_to<T>(value);
}

template <typename T> T k0_asymptotic(T zeta) {
  // K0(z) ~ sqrt(pi/2z) e^{-z} sum_k c_k z^{-k},  c_k = -c_{k-1} (2k-1)^2 / (8k)
  T term = 1.0;
  T sum = 1.0;
  double last = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -odd * odd / (8.0 * k) / zeta;
    const double size = std::abs(term);
    if (k > 10 && size > last) break;  // past the smallest term
    sum += term;
    last = size;
    if (k >= 10 && size < 1e-17 * std::abs(sum)) break;
  }
  return std::sqrt(kPi / (2.0 * zeta)) * std::exp(-zeta) * sum;
}

template double k0_series<double>(double);
template Complex k0_series<Complex>(Complex);
template double k0_continued_fraction<double>(double);
template Complex k0_continued_fraction<Complex>(Complex);
template double k0_asymptotic<double>(double);
template Complex k0_asymptotic<Complex>(Complex);

void j0_y0_series(double t, double& j0, double& y0) {
  const long double x = t;
  const long double q = x * x / 4.0L;
  long double term = 1.0L;
  long double j = 1.0L;
  long double ysum = 0.0L;
  long double harmonic = 0.0L;
  for (int k = 1; k < 400; ++k) {
    term *= -q / static_cast<long double>(k * k);
    harmonic += 1.0L / k;
    j += term;
    ysum -= harmonic * term;
    if (k > x && std::fabs(term) * (1.0L + harmonic) < 1e-22L) break;
  }
  j0 = static_cast<double>(j);
  y0 = static_cast<double>(2.0L / kPiL * ((std::log(x / 2.0L) + kEulerGammaL) * j + ysum));
}

void j0_y0_asymptotic(double t, double& j0, double& y0) {
  // H0(t) = (-2i/pi) K0(-i t)
  const Complex h = Complex(0.0, -2.0 / kPi) * k0_asymptotic(Complex(0.0, -t));
  j0 = h.real();
  y0 = h.imag();
}

}  // namespace detail

Complex branch_sqrt(Complex z) {
  Complex w = std::sqrt(z);
  if (w.imag() < 0.0) w = -w;
  return w;
}

Complex hankel0_first(Complex w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw DomainError("hankel0_first: non-finite argument");
  }
  if (w.imag() < 0.0) throw DomainError("hankel0_first: argument below the real axis");
  if (w == Complex(0.0, 0.0)) throw DomainError("hankel0_first: logarithmic singularity at 0");

  if (w.imag() == 0.0) {
    const double t = w.real();
    if (t < 0.0) return -std::conj(hankel0_first(Complex(-t, 0.0)));
    double j0 = 0.0;
    double y0 = 0.0;
    if (t <= detail::kAsymptoticRadius) {
      detail::j0_y0_series(t, j0, y0);
    } else {
      detail::j0_y0_asymptotic(t, j0, y0);
    }
    return {j0, y0};
  }
  if (w.real() == 0.0) {
    // H0(it) = -(2i/pi) K0(t): keeps bound-state quantities exactly real.
    return {0.0, -2.0 / kPi * dispatch_k0(w.imag())};
  }
  const Complex zeta(w.imag(), -w.real());  // -i w
  return Complex(0.0, -2.0 / kPi) * dispatch_k0(zeta);
}

double bessel_j0(double t) {
  if (t < 0.0 || std::isnan(t)) throw DomainError("bessel_j0: negative argument");
  if (t == 0.0) return 1.0;
  double j0 = 0.0;
  double y0 = 0.0;
  if (t <= detail::kAsymptoticRadius) {
    detail::j0_y0_series(t, j0, y0);
  } else {
    detail::j0_y0_asymptotic(t, j0, y0);
  }
  return j0;
}

double bessel_y0(double t) {
  if (!(t > 0.0)) throw DomainError("bessel_y0: argument must be positive");
  return hankel0_first(Complex(t, 0.0)).imag();
}

double bessel_k0(double t) {
  if (!(t > 0.0)) throw DomainError("bessel_k0: argument must be positive");
  return dispatch_k0(t);
}

Complex free_green(int dimension, Complex z, double r) {
  if (dimension != 2 && dimension != 3) {
    throw ConfigurationError("free_green: dimension must be 2 or 3");
  }
  if (!(r >= 0.0)) throw DomainError("free_green: separation must be nonnegative");
  if (r == 0.0) return {0.0, 0.0};
  const Complex w = branch_sqrt(z);
  if (dimension == 3) return std::exp(kI * w * r) / (4.0 * kPi * r);
  if (z == Complex(0.0, 0.0)) throw DomainError("free_green: 2D kernel is singular at z = 0");
  return Complex(0.0, 0.25) * hankel0_first(w * r);
}

}  // namespace pointint::specfun
