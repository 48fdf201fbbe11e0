#pragma once

#include "pointint/types.hpp"

/// Complex special functions behind the Weyl function and kernel formulas.
///
/// The square-root branch is fixed once for the whole library: Im sqrt(z) >= 0
/// everywhere, so sqrt(-t) = i sqrt(t) on the negative axis and the positive
/// axis carries the boundary value from the upper half-plane.
namespace pointint::specfun {

/// Square root with Im w >= 0 (cut along [0, inf), upper boundary value on it).
Complex branch_sqrt(Complex z);

/// Hankel function of the first kind and order zero, H0(w) = J0(w) + i Y0(w),
/// for Im w >= 0 and w != 0. Throws DomainError otherwise.
Complex hankel0_first(Complex w);

/// J0 on the real half-line t >= 0.
double bessel_j0(double t);

/// Y0 for t > 0.
double bessel_y0(double t);

/// Modified Bessel function K0 for t > 0.
double bessel_k0(double t);

/// psi(1) = Gamma'(1)/Gamma(1) = -euler_gamma.
constexpr double digamma_one() { return -0.57721566490153286060651209008240243; }

/// Regularized free Green kernel at separation r:
///   d = 3: exp(i sqrt(z) r) / (4 pi r),   d = 2: (i/4) H0(sqrt(z) r),
/// and 0 at r = 0. For z on (0, inf) the upper boundary value is returned; at
/// z = 0 the 3D kernel is 1/(4 pi r) and the 2D kernel is undefined.
Complex free_green(int dimension, Complex z, double r);

namespace detail {

// Crossover radii for the K0/H0 evaluation routes, in |argument|.
inline constexpr double kSeriesRadius = 2.0;
inline constexpr double kAsymptoticRadius = 16.0;

// Individual evaluation routes, exposed for overlap testing. T is double or
// std::complex<double>; arguments have Re >= 0.
template <typename T> T k0_series(T zeta);
template <typename T> T k0_continued_fraction(T zeta);
template <typename T> T k0_asymptotic(T zeta);

// Real-axis J0/Y0 by the ascending series (extended precision internally).
void j0_y0_series(double t, double& j0, double& y0);
// Real-axis J0/Y0 by the Hankel asymptotic expansion.
void j0_y0_asymptotic(double t, double& j0, double& y0);

}  // namespace detail

}  // namespace pointint::specfun
