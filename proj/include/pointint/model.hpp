#pragma once

#include <span>
#include <vector>

#include "pointint/types.hpp"

namespace pointint {

/// Interaction centers X = {x_1, ..., x_m} in R^d with internal multiplicity n.
///
/// Every (nm)-dimensional vector or matrix in the library uses the block order
/// I_n (x) (m x m): index s*m + j addresses site j inside copy s, so the site
/// index runs fastest.
struct PointConfiguration {
  int dimension = 3;
  RMatrix points;  // dimension x m, one column per center
  int multiplicity = 1;

  Index sites() const { return points.cols(); }
  Index boundary_size() const { return points.cols() * multiplicity; }
};

/// Builds a configuration from coordinate tuples. Does not validate.
PointConfiguration make_configuration(int dimension,
                                      const std::vector<std::vector<double>>& points,
                                      int multiplicity = 1);

/// Pairwise separations r_jk = |x_j - x_k|.
struct DistanceMatrix {
  RMatrix r;

  Index size() const { return r.rows(); }
  /// Smallest off-diagonal separation (0 when m = 1).
  double min_separation() const;
  double diameter() const;
};

/// Rejects malformed configurations and returns the separation matrix.
/// Centers closer than 1e-12 * diameter count as duplicates; the thrown
/// DuplicateCentersError carries the 0-based index pair.
DistanceMatrix validate(const PointConfiguration& config);

enum class PairKind { general, operator_form, diagonal_alpha, friedrichs, krein };

const char* to_string(PairKind kind);

/// A proper extension H_{C,D} = H* restricted to ker(D Gamma_1 - C Gamma_0),
/// i.e. the boundary relation {(h, h') : C h = D h'}.
struct BoundaryPair {
  CMatrix C;
  CMatrix D;
  PairKind kind = PairKind::general;
  RVector alpha;  // set for diagonal_alpha

  Index size() const { return C.rows(); }
};

/// C = I_n (x) diag(alpha), D = I.
BoundaryPair diagonal_family(std::span<const double> alpha, int multiplicity = 1);
BoundaryPair diagonal_family(const RVector& alpha, int multiplicity = 1);

/// C = B, D = I (B should be Hermitian for a self-adjoint extension).
BoundaryPair operator_pair(const CMatrix& B);

/// Friedrichs extension H_0 = ker Gamma_0: C = I, D = 0.
BoundaryPair friedrichs_pair(Index size);

/// Arbitrary (C, D); sizes must match.
BoundaryPair general_pair(const CMatrix& C, const CMatrix& D);

/// Coefficient matrices linking (xi_0, xi_1) to the boundary values. Both are
/// m x m; E1 = (exp(-r_jk)) and E0 depends on the dimension (diagonal 1 in 3D,
/// 0 in 2D).
struct EMatrices {
  RMatrix E0;
  RMatrix E1;
};

EMatrices e_matrices(const PointConfiguration& config);

/// I_n (x) block, in the library's block order.
template <typename Derived>
auto expand_blocks(const Eigen::MatrixBase<Derived>& block, int multiplicity) {
  using Scalar = typename Derived::Scalar;
  const Index m = block.rows();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> full =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(m * multiplicity,
                                                                  block.cols() * multiplicity);
  for (int s = 0; s < multiplicity; ++s) {
    full.block(s * m, s * block.cols(), m, block.cols()) = block;
  }
  return full;
}

}  // namespace pointint
