#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pointint/model.hpp"
#include "pointint/types.hpp"

namespace pointint {

inline constexpr double kSelfAdjointTol = 1e-10;

struct ExtensionReport {
  bool self_adjoint = false;
  double defect_cd = 0.0;        // ||C D* - D C*||
  double regularity_gap = 0.0;   // smallest eigenvalue of C C* + D D*
  double tolerance = 0.0;        // tol * (||C|| + ||D||)^2, the threshold both are compared with
  std::optional<bool> nonnegative;
  std::vector<std::string> notes;  // "friedrichs", "krein", "diagonal", "operator_form"
};

/// Self-adjointness of H_{C,D}: C D* = D C* and C C* + D D* invertible, each
/// judged against tol * (||C|| + ||D||)^2. Sizes must agree.
ExtensionReport is_self_adjoint(const BoundaryPair& pair, double tol = kSelfAdjointTol);

/// C D* - D M(0) D* (3D, full nm x nm). Its negative inertia is kappa_-.
CMatrix nonnegativity_form(const BoundaryPair& pair, const PointConfiguration& config);

/// Zero threshold used for nonnegativity_form:
/// 1e-9 * (||C|| ||D|| + ||D||^2 ||M(0)||), i.e. relative to the size of the
/// terms rather than of their (possibly cancelling) difference.
double nonnegativity_tol(const BoundaryPair& pair, const PointConfiguration& config);

/// 3D: is C D* - D M(0) D* positive semidefinite? Throws UnsupportedError in
/// 2D and ConfigurationError if the pair is not self-adjoint.
bool is_nonnegative_3d(const BoundaryPair& pair, const PointConfiguration& config);

enum class NonnegativeVerdict { nonnegative, not_nonnegative, unique_nonnegative };

const char* to_string(NonnegativeVerdict verdict);

/// 2D with a reduced pair acting on the hyperplane sum(xi) = 0, expressed in
/// the op_basis of weyl_zero (size n(m-1)). For m = 1 the only nonnegative
/// self-adjoint extension is H_0 and unique_nonnegative is returned.
NonnegativeVerdict is_nonnegative_2d_reduced(const CMatrix& c_red, const CMatrix& d_red,
                                             const PointConfiguration& config);

/// K = (E1 (x) I_n)^{-1} (4 pi M(0) + E0 (x) I_n), relating xi_1 = K xi_0 on
/// the Krein domain (3D). Throws ConditioningError if E1 is not numerically
/// positive definite.
CMatrix krein_coefficients_3d(const PointConfiguration& config);

/// A (C, D) realization of the Krein extension: (M0, I) in 3D; in 2D the
/// Friedrichs pair for m = 1, otherwise rows enforcing sum(Gamma_0) = 0 and
/// P^T (Gamma_1 - A Gamma_0) = 0.
BoundaryPair krein_pair(const PointConfiguration& config);

}  // namespace pointint
