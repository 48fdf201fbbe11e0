#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pointint/model.hpp"
#include "pointint/types.hpp"

namespace pointint {

/// Scan controls for bound_states. The scan variable is s = sqrt(|z|).
struct ScanOptions {
  enum class Method {
    count,      // negative-eigenvalue counting on the operator part (complete)
    sigma_min,  // grid scan of sigma_min(C - D M) with golden-section refinement (best effort)
  };

  std::optional<double> s_max;  // default derived from the pair and the geometry
  int grid = 2000;
  double rel_tol = 1e-13;       // relative bracket width in s
  double s_min_2d = 1e-100;     // 2D lower scan limit (the 2D Weyl function is logarithmic at 0)
  Method method = Method::count;
};

struct BoundState {
  double z = 0.0;            // energy, < 0
  Index multiplicity = 0;
  CMatrix coefficients;      // nm x multiplicity, orthonormal basis of ker(C - D M(z))
  double refinement_residual = 0.0;  // max ||(C - D M(z)) c|| / (||[C D]|| sqrt(1 + ||M(z)||^2))
  bool best_effort = false;
};

struct BoundStateScan {
  std::vector<BoundState> states;  // ascending in z
  std::vector<std::string> warnings;
  double s_max = 0.0;
  double s_min = 0.0;
  bool boundary_warning = false;

  Index total_multiplicity() const;
};

/// kappa_-(C D* - D M(0) D*) in 3D. Throws UnsupportedError in 2D (use
/// bound_states) and ConfigurationError for non-self-adjoint pairs.
Index kappa_minus(const BoundaryPair& pair, const PointConfiguration& config);

/// Negative eigenvalues of H_{C,D} on (-s_max^2, 0): the z with
/// ker(C - D M(z)) != 0, with multiplicities and coefficient vectors.
BoundStateScan bound_states(const BoundaryPair& pair, const PointConfiguration& config,
                            const ScanOptions& opts = {});

/// Raw value at x of the eigenfunction built from coefficient column `column`.
CVector eigenfunction_eval(const BoundState& state, const PointConfiguration& config,
                           const RVector& x, Index column = 0);

struct GerschgorinReport {
  std::vector<Index> K;               // the requested set (0-based, sorted)
  std::vector<Index> strict_indices;  // all k with alpha_k < -sum_j 1/(4 pi r_jk)
  Index m_prime = 0;                  // |K|
  Index bound = 0;                    // n |K|, the implied count
  bool lower_bound_holds = false;     // kappa_- >= n |K|
  bool exact = false;                 // kappa_- == n |K|
};

/// Diagonal-dominance conditions for the diagonal family in 3D:
/// (i)  alpha_k < -sum_{j != k} 1/(4 pi r_jk) for k in K, and
/// (ii) alpha_k >= sum_{j != k} 1/(4 pi r_jk) for k not in K.
GerschgorinReport gerschgorin_check(const RVector& alpha, const PointConfiguration& config,
                                    const std::vector<Index>& K);

struct EssentialSpectrum {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  Index max_negative_eigenvalues = 0;  // nm
};

EssentialSpectrum essential_spectrum(const PointConfiguration& config);

}  // namespace pointint
