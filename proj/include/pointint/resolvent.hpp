#pragma once

#include "pointint/model.hpp"
#include "pointint/types.hpp"

namespace pointint {

/// Kernel of (H_{C,D} - z)^{-1} off the diagonal:
///   G(|x - x'|) I_n + sum_{j,k} g_j(x) W_jk g_k(x'),  W = (C - D M(z))^{-1} D,
/// with g_j the site kernels at parameter z. One factorization of C - D M(z)
/// is shared by every point pair evaluated through the same object.
class ResolventEvaluator {
 public:
  /// Throws DomainError for z in [0, inf) and SpectrumHitError when
  /// C - D M(z) is (numerically) singular, i.e. z is an eigenvalue.
  ResolventEvaluator(const BoundaryPair& pair, const PointConfiguration& config, Complex z);

  /// n x n kernel value. Throws EvaluationError if x = x' or either point is a center.
  CMatrix operator()(const RVector& x, const RVector& xp) const;

  /// The Krein correction term alone.
  CMatrix correction(const RVector& x, const RVector& xp) const;

  Complex z() const { return z_; }
  const CMatrix& coupling() const { return w_; }  // W, nm x nm
  double cond_estimate() const { return cond_; }

 private:
  PointConfiguration config_;
  Complex z_;
  CMatrix w_;
  double cond_ = 0.0;
};

CMatrix resolvent_kernel(const BoundaryPair& pair, const PointConfiguration& config, Complex z,
                         const RVector& x, const RVector& xp);

}  // namespace pointint
