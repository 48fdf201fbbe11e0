#include "pointint/scattering.hpp"

#include <cmath>
#include <sstream>

#include "pointint/errors.hpp"
#include "pointint/extensions.hpp"
#include "pointint/matrixkernel.hpp"
#include "pointint/specfun.hpp"
#include "pointint/weyl.hpp"

namespace pointint {

namespace {

constexpr double kResonanceCond = 1e13;
constexpr double kResonanceRel = 1e-14;

RMatrix closed_form_imag(const PointConfiguration& config, const DistanceMatrix& dist, double x) {
  const Index m = dist.size();
  const double k = std::sqrt(x);
  RMatrix im(m, m);
  for (Index j = 0; j < m; ++j) {
    for (Index l = 0; l < m; ++l) {
      const double r = dist.r(j, l);
      if (config.dimension == 3) {
        im(j, l) = j == l ? k / (4.0 * kPi) : std::sin(k * r) / (4.0 * kPi * r);
      } else {
        im(j, l) = 0.25 * specfun::bessel_j0(k * r);
      }
    }
  }
  return im;
}

}  // namespace

BoundaryWeyl im_weyl_boundary(const PointConfiguration& config, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("boundary values need a positive energy");
  const DistanceMatrix dist = validate(config);
  BoundaryWeyl out;
  out.x = x;
  const CMatrix block = detail::weyl_block(config, dist, Complex(x, 0.0));
  const RMatrix im = closed_form_imag(config, dist, x);
  out.closed_form_mismatch = (block.imag() - im).norm();
  out.m_plus = expand_blocks(block, config.multiplicity);
  out.imag_part = expand_blocks(im, config.multiplicity);
  // the rank is computed per block and multiplied, so it stays exact in n
  const HermitianSpectrum spec = herm_eig(im);
  const double cut = kDefaultRankTol * spec.norm();
  Index r = 0;
  for (double l : spec.eigenvalues) r += l > cut;
  out.rank = r * config.multiplicity;
  return out;
}

ScatteringResult scattering_matrix(const BoundaryPair& pair, const PointConfiguration& config, double x) {
  const BoundaryWeyl bw = im_weyl_boundary(config, x);
  if (pair.size() != config.boundary_size()) {
    throw ConfigurationError("boundary pair size does not match n*m");
  }
  if (!is_self_adjoint(pair).self_adjoint) throw ConfigurationError("pair is not self-adjoint");

  const HermitianSpectrum spec = herm_eig(bw.imag_part);
  const double cut = kDefaultRankTol * spec.norm();
  Index first = 0;
  while (first < spec.eigenvalues.size() && spec.eigenvalues(first) <= cut) ++first;

  ScatteringResult out;
  out.x = x;
  out.rank = spec.eigenvalues.size() - first;
  out.range_basis = spec.eigenvectors.rightCols(out.rank);
  const RVector root = spec.eigenvalues.tail(out.rank).cwiseSqrt();

  const CMatrix a = pair.C - pair.D * bw.m_plus;
  const double scale = spectral_norm(pair.C) + spectral_norm(pair.D) * spectral_norm(bw.m_plus);
  LinearSolve sol;
  try {
    if (sigma_min(a) <= kResonanceRel * scale) throw SingularMatrixError(0, "near-singular");
    sol = solve_det(a, pair.D * out.range_basis);
  } catch (const SingularMatrixError&) {
    std::ostringstream msg;
    msg << "C - D M(x + i0) is singular at x = " << x;
    throw ResonanceError(x, msg.str());
  }
  if (sol.cond_estimate > kResonanceCond) {
    std::ostringstream msg;
    msg << "C - D M(x + i0) is numerically singular at x = " << x << " (cond " << sol.cond_estimate << ")";
    throw ResonanceError(x, msg.str());
  }
  // sqrt(Im M) = V_r L^{1/2} V_r*, so the compression is I + 2i L^{1/2} V_r* W V_r L^{1/2}
  const CMatrix core = out.range_basis.adjoint() * sol.X;
  out.s_matrix = CMatrix::Identity(out.rank, out.rank) +
                 2.0 * kI * root.cast<Complex>().asDiagonal() * core * root.cast<Complex>().asDiagonal();
  out.unitarity_defect =
      out.rank ? spectral_norm(out.s_matrix * out.s_matrix.adjoint() - CMatrix::Identity(out.rank, out.rank))
               : 0.0;
  return out;
}

}  // namespace pointint
