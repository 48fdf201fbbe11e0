#pragma once

#include <optional>

#include "pointint/types.hpp"

/// Dense complex matrix contracts used by the spectral formulas.
///
/// The free functions accept any Eigen expression (real or complex); it is
/// evaluated once into a complex dense matrix. Hermitian inputs are always
/// symmetrized as (A + A*)/2 before factoring, and the defect ||A - A*|| seen
/// beforehand is reported.
namespace pointint {

struct HermitianSpectrum {
  RVector eigenvalues;   // ascending
  CMatrix eigenvectors;  // orthonormal columns
  double symmetry_defect = 0.0;

  /// Spectral norm, max |lambda|.
  double norm() const { return eigenvalues.size() ? eigenvalues.cwiseAbs().maxCoeff() : 0.0; }
};

struct Inertia {
  Index negative = 0;
  Index zero = 0;
  Index positive = 0;
  double zero_tol = 0.0;

  Index size() const { return negative + zero + positive; }
  friend bool operator==(const Inertia& a, const Inertia& b) {
    return a.negative == b.negative && a.zero == b.zero && a.positive == b.positive;
  }
};

struct PsdRoot {
  CMatrix root;
  Index rank = 0;
};

struct LinearSolve {
  CMatrix X;
  Complex det;
  double cond_estimate = 0.0;
};

inline constexpr double kDefaultInertiaTol = 1e-9;
inline constexpr double kDefaultRankTol = 1e-10;

namespace kernel_impl {
HermitianSpectrum herm_eig(CMatrix a);
Inertia inertia(const CMatrix& a, std::optional<double> zero_tol);
PsdRoot psd_sqrt(const CMatrix& a, double rank_tol);
LinearSolve solve_det(const CMatrix& a, const CMatrix& b);
CMatrix nullspace(const CMatrix& a, double tol);
double sigma_min(const CMatrix& a);
double spectral_norm(const CMatrix& a);
}  // namespace kernel_impl

/// Full Hermitian eigendecomposition. Throws NumericError on non-finite input.
template <typename Derived>
HermitianSpectrum herm_eig(const Eigen::MatrixBase<Derived>& a) {
  return kernel_impl::herm_eig(a.template cast<Complex>().eval());
}

/// Eigenvalue sign counts. Without an explicit threshold, eigenvalues within
/// 1e-9 * ||A|| of zero count as zero; an explicit zero_tol is absolute.
template <typename Derived>
Inertia inertia(const Eigen::MatrixBase<Derived>& a, std::optional<double> zero_tol = std::nullopt) {
  return kernel_impl::inertia(a.template cast<Complex>().eval(), zero_tol);
}

/// Hermitian PSD square root. Eigenvalues in [-10 rank_tol ||A||, 0) are
/// clipped; anything more negative throws NotPsdError.
template <typename Derived>
PsdRoot psd_sqrt(const Eigen::MatrixBase<Derived>& a, double rank_tol = kDefaultRankTol) {
  return kernel_impl::psd_sqrt(a.template cast<Complex>().eval(), rank_tol);
}

/// Solves A X = B with full pivoting. An exactly zero pivot throws
/// SingularMatrixError carrying its index; cond_estimate is 1/rcond.
template <typename DA, typename DB>
LinearSolve solve_det(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return kernel_impl::solve_det(a.template cast<Complex>().eval(), b.template cast<Complex>().eval());
}

/// Orthonormal basis of {v : ||A v|| <= tol ||A||}, from the SVD.
template <typename Derived>
CMatrix nullspace(const Eigen::MatrixBase<Derived>& a, double tol = kDefaultRankTol) {
  return kernel_impl::nullspace(a.template cast<Complex>().eval(), tol);
}

template <typename Derived>
double sigma_min(const Eigen::MatrixBase<Derived>& a) {
  return kernel_impl::sigma_min(a.template cast<Complex>().eval());
}

template <typename Derived>
double spectral_norm(const Eigen::MatrixBase<Derived>& a) {
  return kernel_impl::spectral_norm(a.template cast<Complex>().eval());
}

}  // namespace pointint
