#include "pointint/resolvent.hpp"

#include <sstream>

#include "pointint/errors.hpp"
#include "pointint/matrixkernel.hpp"
#include "pointint/specfun.hpp"
#include "pointint/weyl.hpp"

namespace pointint {

namespace {

constexpr double kSpectrumHitCond = 1e13;
constexpr double kSpectrumHitRel = 1e-14;

[[noreturn]] void spectrum_hit(Complex z, const std::string& detail) {
  std::ostringstream msg;
  msg << "z = " << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag())
      << "i is in the spectrum: C - D M(z) is " << detail;
  throw SpectrumHitError(z, msg.str());
}

}  // namespace

ResolventEvaluator::ResolventEvaluator(const BoundaryPair& pair, const PointConfiguration& config,
                                       Complex z)
    : config_(config), z_(z) {
  const WeylEvaluation m = weyl_matrix(config, z);
  if (pair.size() != config.boundary_size()) {
    throw ConfigurationError("boundary pair size does not match n*m");
  }
  const CMatrix a = pair.C - pair.D * m.full;
  // rcond alone cannot see a near-zero 1 x 1 pivot; compare against the size of the terms
  const double scale = spectral_norm(pair.C) + spectral_norm(pair.D) * spectral_norm(m.full);
  if (sigma_min(a) <= kSpectrumHitRel * scale) spectrum_hit(z, "numerically singular");
  LinearSolve sol;
  try {
    sol = solve_det(a, pair.D);
  } catch (const SingularMatrixError&) {
    spectrum_hit(z, "singular");
  }
  if (sol.cond_estimate > kSpectrumHitCond) spectrum_hit(z, "numerically singular");
  w_ = std::move(sol.X);
  cond_ = sol.cond_estimate;
}

CMatrix ResolventEvaluator::correction(const RVector& x, const RVector& xp) const {
  const int n = config_.multiplicity;
  const CMatrix gx = expand_blocks(site_kernels(config_, z_, x), n);    // nm x n
  const CMatrix gxp = expand_blocks(site_kernels(config_, z_, xp), n);  // nm x n
  return gx.transpose() * w_ * gxp;
}

CMatrix ResolventEvaluator::operator()(const RVector& x, const RVector& xp) const {
  if (x.size() != config_.dimension || xp.size() != config_.dimension) {
    throw ConfigurationError("evaluation point has the wrong dimension");
  }
  const double r = (x - xp).norm();
  if (r == 0.0) throw EvaluationError("resolvent kernel is singular on the diagonal x = x'");
  CMatrix out = correction(x, xp);
  out.diagonal().array() += specfun::free_green(config_.dimension, z_, r);
  return out;
}

CMatrix resolvent_kernel(const BoundaryPair& pair, const PointConfiguration& config, Complex z,
                         const RVector& x, const RVector& xp) {
  return ResolventEvaluator(pair, config, z)(x, xp);
}

}  // namespace pointint
