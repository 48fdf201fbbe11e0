#pragma once

#include "pointint/model.hpp"
#include "pointint/types.hpp"

namespace pointint {

/// Boundary value M(x + i0) at a positive energy, with the closed-form
/// imaginary part: sqrt(x)/(4 pi) and sin(sqrt(x) r)/(4 pi r) in 3D,
/// J0(sqrt(x) r)/4 in 2D. All matrices are full nm x nm.
struct BoundaryWeyl {
  double x = 0.0;
  CMatrix m_plus;
  RMatrix imag_part;
  Index rank = 0;                     // dim ran(Im M), cutoff 1e-10 ||Im M||
  double closed_form_mismatch = 0.0;  // ||Im m_plus - imag_part||
};

BoundaryWeyl im_weyl_boundary(const PointConfiguration& config, double x);

/// On-shell scattering matrix of {H_{C,D}, H_0} at energy x > 0,
///   S = I + 2i sqrt(Im M) (C - D M)^{-1} D sqrt(Im M),
/// reported on ran(Im M) in the eigenbasis range_basis (nm x rank).
struct ScatteringResult {
  double x = 0.0;
  CMatrix s_matrix;
  CMatrix range_basis;
  Index rank = 0;
  double unitarity_defect = 0.0;  // ||S S* - I||
};

/// Throws ResonanceError when C - D M(x + i0) is singular.
ScatteringResult scattering_matrix(const BoundaryPair& pair, const PointConfiguration& config, double x);

}  // namespace pointint
