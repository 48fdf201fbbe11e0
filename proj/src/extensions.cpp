#include "pointint/extensions.hpp"

#include <cmath>

#include "pointint/errors.hpp"
#include "pointint/matrixkernel.hpp"
#include "pointint/weyl.hpp"

namespace pointint {

namespace {

void require_size(const BoundaryPair& pair, const PointConfiguration& config) {
  if (pair.C.rows() != config.boundary_size()) {
    throw ConfigurationError("boundary pair size " + std::to_string(pair.C.rows()) +
                             " does not match n*m = " + std::to_string(config.boundary_size()));
  }
}

void require_dimension3(const PointConfiguration& config, const char* what) {
  if (config.dimension != 3) {
    throw UnsupportedError(std::string(what) +
                           " is a 3D formula; in 2D use the reduced-pair test or bound_states");
  }
}

bool is_diagonal_real(const CMatrix& c) {
  for (Index i = 0; i < c.rows(); ++i)
    for (Index j = 0; j < c.cols(); ++j)
      if (i == j ? c(i, j).imag() != 0.0 : c(i, j) != Complex(0.0)) return false;
  return true;
}

}  // namespace

ExtensionReport is_self_adjoint(const BoundaryPair& pair, double tol) {
  const CMatrix& c = pair.C;
  const CMatrix& d = pair.D;
  if (c.rows() != c.cols() || d.rows() != d.cols() || c.rows() != d.rows()) {
    throw ConfigurationError("C and D must be square matrices of the same size");
  }
  ExtensionReport report;
  const double norm_c = spectral_norm(c), norm_d = spectral_norm(d);
  const double scale = (norm_c + norm_d) * (norm_c + norm_d);
  report.tolerance = tol * scale;
  report.defect_cd = spectral_norm(c * d.adjoint() - d * c.adjoint());
  report.regularity_gap =
      c.size() ? herm_eig(c * c.adjoint() + d * d.adjoint()).eigenvalues.minCoeff() : 0.0;
  report.self_adjoint = scale > 0.0 && report.defect_cd <= report.tolerance &&
                        report.regularity_gap >= report.tolerance;

  if (norm_d <= tol * norm_c) report.notes.push_back("friedrichs");
  if (pair.kind == PairKind::krein) report.notes.push_back("krein");
  if (pair.kind == PairKind::diagonal_alpha || (d.isIdentity(0.0) && is_diagonal_real(c))) {
    report.notes.push_back("diagonal");
  } else if (pair.kind == PairKind::operator_form || d.isIdentity(0.0)) {
    report.notes.push_back("operator_form");
  }
  return report;
}

CMatrix nonnegativity_form(const BoundaryPair& pair, const PointConfiguration& config) {
  require_dimension3(config, "C D* - D M(0) D*");
  require_size(pair, config);
  const CMatrix m0 = expand_blocks(weyl_zero(config).M0, config.multiplicity).cast<Complex>();
  return pair.C * pair.D.adjoint() - pair.D * m0 * pair.D.adjoint();
}

double nonnegativity_tol(const BoundaryPair& pair, const PointConfiguration& config) {
  require_dimension3(config, "C D* - D M(0) D*");
  const double norm_c = spectral_norm(pair.C), norm_d = spectral_norm(pair.D);
  const double norm_m0 = spectral_norm(weyl_zero(config).M0);
  return kDefaultInertiaTol * (norm_c * norm_d + norm_d * norm_d * norm_m0);
}

bool is_nonnegative_3d(const BoundaryPair& pair, const PointConfiguration& config) {
  require_dimension3(config, "is_nonnegative_3d");
  if (!is_self_adjoint(pair).self_adjoint) {
    throw ConfigurationError("nonnegativity is only defined for self-adjoint pairs");
  }
  const CMatrix form = nonnegativity_form(pair, config);
  return inertia(form, nonnegativity_tol(pair, config)).negative == 0;
}

const char* to_string(NonnegativeVerdict verdict) {
  switch (verdict) {
    case NonnegativeVerdict::nonnegative: return "nonnegative";
    case NonnegativeVerdict::not_nonnegative: return "not_nonnegative";
    case NonnegativeVerdict::unique_nonnegative: return "unique_nonnegative";
  }
  return "unknown";
}

NonnegativeVerdict is_nonnegative_2d_reduced(const CMatrix& c_red, const CMatrix& d_red,
                                             const PointConfiguration& config) {
  if (config.dimension != 2) throw UnsupportedError("reduced-pair test applies to d = 2 only");
  const WeylZeroRelation zero = weyl_zero(config);
  if (config.sites() == 1) return NonnegativeVerdict::unique_nonnegative;
  const Index size = zero.op_matrix.rows() * config.multiplicity;
  if (c_red.rows() != size || c_red.cols() != size || d_red.rows() != size || d_red.cols() != size) {
    throw ConfigurationError("reduced pair must be n(m-1) = " + std::to_string(size) + " square");
  }
  const CMatrix op = expand_blocks(zero.op_matrix, config.multiplicity).cast<Complex>();
  const CMatrix form = c_red * d_red.adjoint() - d_red * op * d_red.adjoint();
  const double norm_c = spectral_norm(c_red), norm_d = spectral_norm(d_red);
  const double tol = kDefaultInertiaTol * (norm_c * norm_d + norm_d * norm_d * spectral_norm(op));
  return inertia(form, tol).negative == 0 ? NonnegativeVerdict::nonnegative
                                          : NonnegativeVerdict::not_nonnegative;
}

CMatrix krein_coefficients_3d(const PointConfiguration& config) {
  require_dimension3(config, "krein_coefficients_3d");
  const EMatrices e = e_matrices(config);
  Eigen::LLT<RMatrix> llt(e.E1);
  if (llt.info() != Eigen::Success) {
    throw ConditioningError("E1 is not numerically positive definite; Krein coefficients unavailable");
  }
  const RMatrix rhs = 4.0 * kPi * weyl_zero(config).M0 + e.E0;
  const RMatrix k = llt.solve(rhs);
  return expand_blocks(k, config.multiplicity).cast<Complex>();
}

BoundaryPair krein_pair(const PointConfiguration& config) {
  const WeylZeroRelation zero = weyl_zero(config);
  const int n = config.multiplicity;
  const Index m = config.sites();
  BoundaryPair pair;
  pair.kind = PairKind::krein;
  if (config.dimension == 3) {
    pair.C = expand_blocks(zero.M0, n).cast<Complex>();
    pair.D = CMatrix::Identity(m * n, m * n);
    return pair;
  }
  if (m == 1) {
    pair = friedrichs_pair(n);
    pair.kind = PairKind::krein;
    return pair;
  }
  // first row: e^T Gamma_0 = 0; remaining rows: P^T Gamma_1 = (P^T A P) P^T Gamma_0
  const RMatrix& p = zero.op_basis;
  RMatrix c(m, m), d = RMatrix::Zero(m, m);
  c.row(0) = zero.mul_basis.transpose();
  c.bottomRows(m - 1) = zero.op_matrix * p.transpose();
  d.bottomRows(m - 1) = p.transpose();
  pair.C = expand_blocks(c, n).cast<Complex>();
  pair.D = expand_blocks(d, n).cast<Complex>();
  return pair;
}

}  // namespace pointint
