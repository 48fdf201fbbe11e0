#include "pointint/matrixkernel.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pointint/errors.hpp"

namespace pointint::kernel_impl {

namespace {

void require_finite(const CMatrix& a, const char* where) {
  if (!a.allFinite()) throw NumericError(std::string(where) + ": non-finite matrix entries");
}

void require_square(const CMatrix& a, const char* where) {
  if (a.rows() != a.cols()) throw ConfigurationError(std::string(where) + ": matrix must be square");
}

}  // namespace

HermitianSpectrum herm_eig(CMatrix a) {
  require_square(a, "herm_eig");
  require_finite(a, "herm_eig");
  HermitianSpectrum out;
  out.symmetry_defect = (a - a.adjoint()).norm();
  if (a.size() == 0) {
    out.eigenvalues = RVector(0);
    out.eigenvectors = CMatrix(0, 0);
    return out;
  }
  a = (0.5 * (a + a.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(a);
  if (solver.info() != Eigen::Success) throw NumericError("herm_eig: eigensolver did not converge");
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  return out;
}

Inertia inertia(const CMatrix& a, std::optional<double> zero_tol) {
  const HermitianSpectrum spec = herm_eig(a);
  Inertia out;
  out.zero_tol = zero_tol ? *zero_tol : kDefaultInertiaTol * spec.norm();
  for (double lambda : spec.eigenvalues) {
    if (lambda < -out.zero_tol) {
      ++out.negative;
    } else if (lambda > out.zero_tol) {
      ++out.positive;
    } else {
      ++out.zero;
    }
  }
  return out;
}

PsdRoot psd_sqrt(const CMatrix& a, double rank_tol) {
  const HermitianSpectrum spec = herm_eig(a);
  const double scale = spec.norm();
  PsdRoot out;
  RVector roots(spec.eigenvalues.size());
  for (Index i = 0; i < roots.size(); ++i) {
    const double lambda = spec.eigenvalues(i);
    if (lambda < -10.0 * rank_tol * scale) {
      throw NotPsdError(lambda, "psd_sqrt: matrix has eigenvalue " + std::to_string(lambda));
    }
    if (lambda > rank_tol * scale) ++out.rank;
    roots(i) = std::sqrt(std::max(lambda, 0.0));
  }
  out.root = spec.eigenvectors * roots.asDiagonal() * spec.eigenvectors.adjoint();
  return out;
}

LinearSolve solve_det(const CMatrix& a, const CMatrix& b) {
  require_square(a, "solve_det");
  require_finite(a, "solve_det");
  if (b.rows() != a.rows()) throw ConfigurationError("solve_det: right-hand side has wrong row count");
  LinearSolve out;
  if (a.rows() == 0) {
    out.X = b;
    out.det = 1.0;
    out.cond_estimate = 1.0;
    return out;
  }
  Eigen::FullPivLU<CMatrix> lu(a);
  const auto diag = lu.matrixLU().diagonal();
  for (Index i = 0; i < diag.size(); ++i) {
    if (diag(i) == Complex(0.0, 0.0)) {
      throw SingularMatrixError(i, "solve_det: matrix is singular (zero pivot " + std::to_string(i) + ")");
    }
  }
  out.X = lu.solve(b);
  out.det = lu.determinant();
  const double rcond = lu.rcond();
  out.cond_estimate = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  return out;
}

CMatrix nullspace(const CMatrix& a, double tol) {
  require_finite(a, "nullspace");
  const Index n = a.cols();
  if (n == 0) return CMatrix(0, 0);
  if (a.rows() == 0) return CMatrix::Identity(n, n);
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const RVector& s = svd.singularValues();
  const double scale = s.size() ? s(0) : 0.0;
  // singular values beyond min(rows, cols) are structurally zero
  Index keep = 0;
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol * scale) ++keep;
  }
  if (scale == 0.0) keep = 0;
  return svd.matrixV().rightCols(n - keep);
}

double sigma_min(const CMatrix& a) {
  require_finite(a, "sigma_min");
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  if (a.rows() < a.cols()) return 0.0;
  return svd.singularValues().minCoeff();
}

double spectral_norm(const CMatrix& a) {
  require_finite(a, "spectral_norm");
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

}  // namespace pointint::kernel_impl
