#include "pointint/weyl.hpp"

#include <cmath>
#include <string>

#include "pointint/errors.hpp"
#include "pointint/specfun.hpp"

namespace pointint {

namespace {

Complex diagonal_entry(int dimension, Complex z) {
  const Complex w = specfun::branch_sqrt(z);
  if (dimension == 3) return kI * w / (4.0 * kPi);
  if (w == Complex(0.0, 0.0)) throw DomainError("2D Weyl function is singular at z = 0");
  // sqrt(z)/(2i) has argument in [-pi/2, pi/2], so the principal log is continuous
  return (specfun::digamma_one() - std::log(w / (2.0 * kI))) / (2.0 * kPi);
}

void check_off_axis(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("spectral parameter must be finite");
  }
  if (z.imag() == 0.0 && z.real() >= 0.0) {
    throw DomainError("z = " + std::to_string(z.real()) +
                      " lies on [0, inf); use im_weyl_boundary for boundary values");
  }
}

}  // namespace

namespace detail {

CMatrix weyl_block(const PointConfiguration& config, const DistanceMatrix& dist, Complex z) {
  const Index m = dist.size();
  CMatrix block(m, m);
  const Complex diag = diagonal_entry(config.dimension, z);
  for (Index j = 0; j < m; ++j) {
    block(j, j) = diag;
    for (Index k = j + 1; k < m; ++k) {
      const Complex g = specfun::free_green(config.dimension, z, dist.r(j, k));
      block(j, k) = g;
      block(k, j) = g;
    }
  }
  return block;
}

RMatrix weyl_block_negative(const PointConfiguration& config, const DistanceMatrix& dist, double s) {
  // on the negative axis every entry is exactly real (see branch_sqrt)
  return weyl_block(config, dist, Complex(-s * s, 0.0)).real();
}

RMatrix hyperplane_basis(Index m) {
  RMatrix p = RMatrix::Zero(m, std::max<Index>(m - 1, 0));
  for (Index j = 0; j + 1 < m; ++j) {
    RVector v = RVector::Zero(m);
    v(j) = 1.0;
    v(j + 1) = -1.0;
    for (Index k = 0; k < j; ++k) v -= p.col(k).dot(v) * p.col(k);
    p.col(j) = v.normalized();
  }
  return p;
}

}  // namespace detail

WeylEvaluation weyl_matrix(const PointConfiguration& config, Complex z) {
  check_off_axis(z);
  const DistanceMatrix dist = validate(config);
  WeylEvaluation out;
  out.z = z;
  out.block = detail::weyl_block(config, dist, z);
  out.full = expand_blocks(out.block, config.multiplicity);
  return out;
}

WeylZeroRelation weyl_zero(const PointConfiguration& config) {
  const DistanceMatrix dist = validate(config);
  const Index m = dist.size();
  WeylZeroRelation out;
  if (config.dimension == 3) {
    out.kind = WeylZeroRelation::Kind::matrix;
    out.M0 = RMatrix::Zero(m, m);
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < m; ++k)
        if (j != k) out.M0(j, k) = 1.0 / (4.0 * kPi * dist.r(j, k));
    return out;
  }
  out.kind = WeylZeroRelation::Kind::relation;
  out.form_matrix = RMatrix::Zero(m, m);
  for (Index j = 0; j < m; ++j)
    for (Index k = 0; k < m; ++k)
      if (j != k) out.form_matrix(j, k) = -std::log(dist.r(j, k)) / (2.0 * kPi);
  out.op_basis = detail::hyperplane_basis(m);
  out.op_matrix = out.op_basis.transpose() * out.form_matrix * out.op_basis;
  out.op_matrix = (0.5 * (out.op_matrix + out.op_matrix.transpose())).eval();
  out.mul_basis = RVector::Constant(m, 1.0 / std::sqrt(static_cast<double>(m)));
  return out;
}

CVector site_kernels(const PointConfiguration& config, Complex z, const RVector& x) {
  if (x.size() != config.dimension) throw ConfigurationError("evaluation point has the wrong dimension");
  if (!x.allFinite()) throw EvaluationError("evaluation point is not finite");
  const Index m = config.sites();
  CVector g(m);
  for (Index j = 0; j < m; ++j) {
    const double r = (x - config.points.col(j)).norm();
    if (r == 0.0) {
      throw EvaluationError("evaluation point coincides with center " + std::to_string(j));
    }
    g(j) = specfun::free_green(config.dimension, z, r);
  }
  return g;
}

CVector gamma_field_eval(const PointConfiguration& config, Complex z, const CVector& xi,
                         const RVector& x) {
  check_off_axis(z);
  validate(config);
  const Index m = config.sites();
  if (xi.size() != config.boundary_size()) {
    throw ConfigurationError("coefficient vector must have length n*m");
  }
  const CVector g = site_kernels(config, z, x);
  CVector out(config.multiplicity);
  for (int s = 0; s < config.multiplicity; ++s) out(s) = xi.segment(s * m, m).cwiseProduct(g).sum();
  return out;
}

}  // namespace pointint
