#pragma once

#include "pointint/model.hpp"
#include "pointint/types.hpp"

namespace pointint {

/// M(z) for one block and for the full I_n (x) block matrix.
struct WeylEvaluation {
  Complex z;
  CMatrix block;  // m x m
  CMatrix full;   // nm x nm
};

/// Weyl function off the spectrum of the free operator. Diagonal entries are
/// i sqrt(z)/(4 pi) in 3D and (psi(1) - ln(sqrt(z)/(2i)))/(2 pi) in 2D; the
/// off-diagonal entries are free Green kernels. Throws DomainError for z in
/// [0, inf) -- boundary values at positive energies live in scattering.
WeylEvaluation weyl_matrix(const PointConfiguration& config, Complex z);

/// Zero-energy limit. In 3D it is the matrix M0 with entries 1/(4 pi r_jk)
/// off the diagonal. In 2D it is a linear relation: an operator part
/// op_matrix = P^T A P on the hyperplane sum(xi) = 0 (columns of op_basis = P),
/// with A_jk = -ln(r_jk)/(2 pi), and multivalued part spanned by mul_basis.
struct WeylZeroRelation {
  enum class Kind { matrix, relation };

  Kind kind = Kind::matrix;
  RMatrix M0;           // 3D only
  RMatrix op_basis;     // 2D: m x (m-1), orthonormal
  RMatrix op_matrix;    // 2D: (m-1) x (m-1)
  RVector mul_basis;    // 2D: (1, ..., 1)/sqrt(m)
  RMatrix form_matrix;  // 2D: A, m x m
};

WeylZeroRelation weyl_zero(const PointConfiguration& config);

/// Values g_j(x) = G(sqrt(z) |x - x_j|) of the site kernels, j = 0..m-1.
/// Throws EvaluationError if x is one of the centers.
CVector site_kernels(const PointConfiguration& config, Complex z, const RVector& x);

/// gamma(z) xi evaluated at x: copy s of the result is sum_j xi[s m + j] g_j(x).
/// xi has length nm in the library block order.
CVector gamma_field_eval(const PointConfiguration& config, Complex z, const CVector& xi,
                         const RVector& x);

namespace detail {

/// M_s(z) without the domain check: z in (0, inf) gives the boundary value
/// M(z + i0), and z = 0 the 3D matrix M0 (2D throws). Used by the scans and
/// the scattering module.
CMatrix weyl_block(const PointConfiguration& config, const DistanceMatrix& dist, Complex z);

/// Real symmetric M_s(-s^2) for s > 0 (s = 0 allowed in 3D).
RMatrix weyl_block_negative(const PointConfiguration& config, const DistanceMatrix& dist, double s);

/// Orthonormal basis of sum(xi) = 0 by modified Gram-Schmidt on e_j - e_{j+1}.
RMatrix hyperplane_basis(Index m);

}  // namespace detail

}  // namespace pointint
