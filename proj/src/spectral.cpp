#include "pointint/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "pointint/errors.hpp"
#include "pointint/extensions.hpp"
#include "pointint/matrixkernel.hpp"
#include "pointint/specfun.hpp"
#include "pointint/weyl.hpp"

namespace pointint {

namespace {

constexpr double kCountTol = 1e-12;

// Operator part of the relation {(h, h') : C h = D h'} on ran D*, with
// orthonormal basis Q of ran D* and B = Q* D^+ C Q. For self-adjoint pairs
// C Q = D Q B, so ker(C - D M) = Q ker(B - Q* M Q).
struct OperatorPart {
  CMatrix Q;
  CMatrix B;
  double symmetry_defect = 0.0;
};

OperatorPart operator_part(const BoundaryPair& pair) {
  Eigen::JacobiSVD<CMatrix> svd(pair.D, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RVector& sv = svd.singularValues();
  const double cutoff = kDefaultRankTol * (spectral_norm(pair.C) + (sv.size() ? sv(0) : 0.0));
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;

  OperatorPart op;
  op.Q = svd.matrixV().leftCols(rank);
  const CMatrix ur = svd.matrixU().leftCols(rank);
  const RVector inv = sv.head(rank).cwiseInverse();
  // Q* D^+ C Q with D^+ = V_r S_r^{-1} U_r*, and Q* V_r = I
  CMatrix b = inv.cast<Complex>().asDiagonal() * (ur.adjoint() * pair.C * op.Q);
  op.symmetry_defect = (b - b.adjoint()).norm();
  op.B = 0.5 * (b + b.adjoint());
  return op;
}

// ||(C - D M) c|| <= ||[C D]|| sqrt(1 + ||M||^2) for unit c; never zero for a regular pair,
// unlike ||C - D M|| (which vanishes at a root when nm = 1).
double pencil_scale(const BoundaryPair& pair, const CMatrix& m) {
  CMatrix cd(pair.C.rows(), pair.C.cols() + pair.D.cols());
  cd << pair.C, pair.D;
  const double nm = spectral_norm(m);
  return spectral_norm(cd) * std::sqrt(1.0 + nm * nm);
}

class Scanner {
 public:
  Scanner(const BoundaryPair& pair, const PointConfiguration& config, const ScanOptions& opts)
      : pair_(pair), config_(config), opts_(opts), dist_(validate(config)), op_(operator_part(pair)) {}

  BoundStateScan run();

 private:
  CMatrix full_weyl(double s) const {
    const RMatrix block = (config_.dimension == 3 && s == 0.0) ? weyl_zero(config_).M0
                                                               : detail::weyl_block_negative(config_, dist_, s);
    return expand_blocks(block, config_.multiplicity).cast<Complex>();
  }

  CMatrix reduced(double s) const { return op_.B - op_.Q.adjoint() * full_weyl(s) * op_.Q; }

  Index count_negative(double s) const {
    const Index r = op_.Q.cols();
    if (r == 0) return 0;
    const CMatrix m = full_weyl(s);
    const CMatrix qmq = op_.Q.adjoint() * m * op_.Q;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(op_.B - qmq, Eigen::EigenvaluesOnly);
    // rounding guard: a threshold eigenvalue (identically zero at s -> 0) must not count.
    // Scaled by ||M||, not ||Q* M Q||: the compression can cancel to far below its rounding error.
    const double tol = (s == 0.0) ? zero_tol_ : kCountTol * (norm_b_ + spectral_norm(m));
    Index n = 0;
    for (double l : es.eigenvalues()) n += l < -tol;
    return n;
  }

  // Count as s -> 0+ in 2D. The Weyl function behaves like L(s) e e^T + A with
  // L -> +inf, so directions meeting the e_mul part each contribute one
  // negative eigenvalue and the rest is the compression of B - Q* A Q.
  Index count_at_zero_2d() const;

  double default_s_max() const;
  void bisect(double a, double b, Index na, Index nb, std::vector<BoundState>& out) const;
  BoundState make_state(double s, Index multiplicity, bool best_effort) const;
  void scan_sigma_min(const std::vector<double>& grid, BoundStateScan& result) const;

  const BoundaryPair& pair_;
  const PointConfiguration& config_;
  const ScanOptions& opts_;
  DistanceMatrix dist_;
  OperatorPart op_;
  double zero_tol_ = 0.0;
  double norm_b_ = 0.0;
  bool geometric_ = false;
};

Index Scanner::count_at_zero_2d() const {
  const Index r = op_.Q.cols();
  if (r == 0) return 0;
  const WeylZeroRelation zero = weyl_zero(config_);
  const int n = config_.multiplicity;
  const CMatrix e = expand_blocks(zero.mul_basis, n).cast<Complex>();  // nm x n
  const CMatrix a = expand_blocks(zero.form_matrix, n).cast<Complex>();
  const CMatrix qe = op_.Q.adjoint() * e;
  Eigen::JacobiSVD<CMatrix> svd(qe, Eigen::ComputeFullU);
  const RVector& sv = svd.singularValues();
  Index k = 0;
  while (k < sv.size() && sv(k) > kDefaultRankTol) ++k;
  const CMatrix w = svd.matrixU().rightCols(r - k);
  const CMatrix t = op_.B - op_.Q.adjoint() * a * op_.Q;
  if (w.cols() == 0) return k;
  const CMatrix tw = w.adjoint() * t * w;
  return k + inertia(tw, kDefaultInertiaTol * (spectral_norm(op_.B) + spectral_norm(a) + 1.0)).negative;
}

double Scanner::default_s_max() const {
  const double norm_b = op_.Q.cols() ? spectral_norm(op_.B) : 0.0;
  const double sep = dist_.size() > 1 ? 10.0 / dist_.min_separation() : 0.0;
  if (config_.dimension == 3) return 4.0 * kPi * (norm_b + 1.0) + sep;
  return std::max(2.0 * std::exp(specfun::digamma_one() + 2.0 * kPi * (norm_b + 1.0)), sep);
}

void Scanner::bisect(double a, double b, Index na, Index nb, std::vector<BoundState>& out) const {
  if (b - a <= opts_.rel_tol * b || b <= 1e-290) {
    out.push_back(make_state(0.5 * (a + b), na - nb, false));
    return;
  }
  const double mid = (geometric_ && a > 0.0 && b > 4.0 * a) ? std::sqrt(a * b) : 0.5 * (a + b);
  if (!(mid > a && mid < b)) {
    out.push_back(make_state(0.5 * (a + b), na - nb, false));
    return;
  }
  const Index nm = count_negative(mid);
  // a larger s gives fewer negatives; roots of multiplicity are split off as counts drop
  if (nm > nb) bisect(mid, b, nm, nb, out);
  if (na > nm) bisect(a, mid, na, nm, out);
}

BoundState Scanner::make_state(double s, Index multiplicity, bool best_effort) const {
  BoundState st;
  st.z = -s * s;
  st.best_effort = best_effort;
  const CMatrix mfull = full_weyl(s);
  const CMatrix a = pair_.C - pair_.D * mfull;
  if (!best_effort) {
    const HermitianSpectrum spec = herm_eig(reduced(s));
    std::vector<Index> order(spec.eigenvalues.size());
    for (Index i = 0; i < static_cast<Index>(order.size()); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](Index x, Index y) {
      return std::abs(spec.eigenvalues(x)) < std::abs(spec.eigenvalues(y));
    });
    multiplicity = std::min<Index>(multiplicity, static_cast<Index>(order.size()));
    st.coefficients = CMatrix(pair_.size(), multiplicity);
    for (Index i = 0; i < multiplicity; ++i) st.coefficients.col(i) = op_.Q * spec.eigenvectors.col(order[i]);
  } else {
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
    multiplicity = std::max<Index>(multiplicity, 1);
    st.coefficients = svd.matrixV().rightCols(multiplicity);
  }
  st.multiplicity = multiplicity;
  const double scale = pencil_scale(pair_, mfull);
  for (Index i = 0; i < multiplicity; ++i) {
    const double r = (a * st.coefficients.col(i)).norm() / scale;
    st.refinement_residual = std::max(st.refinement_residual, r);
  }
  return st;
}

void Scanner::scan_sigma_min(const std::vector<double>& grid, BoundStateScan& result) const {
  auto f = [&](double s) {
    const CMatrix m = full_weyl(s);
    return sigma_min(pair_.C - pair_.D * m) / pencil_scale(pair_, m);
  };
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = f(grid[i]);
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (!(values[i] <= values[i - 1] && values[i] <= values[i + 1])) continue;
    double a = grid[i - 1], b = grid[i + 1];
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > opts_.rel_tol * b) {
      if (fc < fd) {
        b = d, d = c, fd = fc;
        c = b - phi * (b - a), fc = f(c);
      } else {
        a = c, c = d, fc = fd;
        d = a + phi * (b - a), fd = f(d);
      }
    }
    const double s = 0.5 * (a + b);
    if (f(s) > 1e-8) continue;
    const CMatrix am = pair_.C - pair_.D * full_weyl(s);
    const Index mult = std::max<Index>(nullspace(am, 1e-8).cols(), 1);
    result.states.push_back(make_state(s, mult, true));
  }
  if (!result.states.empty()) {
    result.warnings.push_back("sigma_min scan is best effort: completeness is not guaranteed");
  }
}

BoundStateScan Scanner::run() {
  if (opts_.grid < 2) throw ConfigurationError("scan grid needs at least 2 points");
  if (!(opts_.rel_tol > 0.0)) throw ConfigurationError("scan tolerance must be positive");
  if (opts_.s_max && !(*opts_.s_max > 0.0 && std::isfinite(*opts_.s_max))) {
    throw ConfigurationError("s_max must be positive and finite");
  }
  if (!(opts_.s_min_2d > 0.0)) throw ConfigurationError("s_min_2d must be positive");

  BoundStateScan result;
  norm_b_ = op_.Q.cols() ? spectral_norm(op_.B) : 0.0;
  result.s_max = opts_.s_max.value_or(default_s_max());
  geometric_ = config_.dimension == 2;
  result.s_min = geometric_ ? std::min(opts_.s_min_2d, 0.5 * result.s_max) : 0.0;
  if (op_.symmetry_defect > 1e-8 * (1.0 + op_.B.norm())) {
    std::ostringstream msg;
    msg << "operator part is not Hermitian (defect " << op_.symmetry_defect << ")";
    result.warnings.push_back(msg.str());
  }
  if (config_.dimension == 3) {
    const CMatrix m0 = expand_blocks(weyl_zero(config_).M0, config_.multiplicity).cast<Complex>();
    zero_tol_ = kDefaultInertiaTol * (spectral_norm(op_.B) + spectral_norm(m0));
  }

  std::vector<double> grid(opts_.grid + 1);
  for (int i = 0; i <= opts_.grid; ++i) {
    const double t = static_cast<double>(i) / opts_.grid;
    grid[i] = geometric_ ? result.s_min * std::pow(result.s_max / result.s_min, t) : t * result.s_max;
  }
  grid.back() = result.s_max;

  if (opts_.method == ScanOptions::Method::sigma_min) {
    scan_sigma_min(grid, result);
  } else {
    std::vector<Index> counts(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) counts[i] = count_negative(grid[i]);
    for (std::size_t i = grid.size() - 1; i > 0; --i) {
      if (counts[i - 1] > counts[i]) bisect(grid[i - 1], grid[i], counts[i - 1], counts[i], result.states);
    }
    if (counts.back() > 0) {
      result.boundary_warning = true;
      std::ostringstream msg;
      msg << counts.back() << " eigenvalue(s) lie below -s_max^2 = " << -result.s_max * result.s_max;
      result.warnings.push_back(msg.str());
    }
    if (geometric_) {
      const Index limit = count_at_zero_2d();
      if (limit != counts.front()) {
        result.boundary_warning = true;
        std::ostringstream msg;
        msg << (limit - counts.front()) << " eigenvalue(s) may lie above -s_min^2 = "
            << -result.s_min * result.s_min;
        result.warnings.push_back(msg.str());
      }
    }
  }
  std::sort(result.states.begin(), result.states.end(),
            [](const BoundState& x, const BoundState& y) { return x.z < y.z; });
  const Index cap = config_.boundary_size();
  if (result.total_multiplicity() > cap) {
    result.warnings.push_back("more than n*m eigenvalues found; results are unreliable");
  }
  return result;
}

}  // namespace

Index BoundStateScan::total_multiplicity() const {
  Index total = 0;
  for (const auto& s : states) total += s.multiplicity;
  return total;
}

Index kappa_minus(const BoundaryPair& pair, const PointConfiguration& config) {
  if (config.dimension != 3) {
    throw UnsupportedError("kappa_minus has no closed form in 2D; count the roots from bound_states");
  }
  if (!is_self_adjoint(pair).self_adjoint) throw ConfigurationError("pair is not self-adjoint");
  return inertia(nonnegativity_form(pair, config), nonnegativity_tol(pair, config)).negative;
}

BoundStateScan bound_states(const BoundaryPair& pair, const PointConfiguration& config,
                            const ScanOptions& opts) {
  validate(config);
  if (pair.size() != config.boundary_size()) {
    throw ConfigurationError("boundary pair size does not match n*m");
  }
  if (!is_self_adjoint(pair).self_adjoint) throw ConfigurationError("pair is not self-adjoint");
  return Scanner(pair, config, opts).run();
}

CVector eigenfunction_eval(const BoundState& state, const PointConfiguration& config,
                           const RVector& x, Index column) {
  if (column < 0 || column >= state.coefficients.cols()) {
    throw ConfigurationError("coefficient column out of range");
  }
  return gamma_field_eval(config, Complex(state.z, 0.0), state.coefficients.col(column), x);
}

GerschgorinReport gerschgorin_check(const RVector& alpha, const PointConfiguration& config,
                                    const std::vector<Index>& K) {
  if (config.dimension != 3) throw UnsupportedError("the Gerschgorin conditions are stated for d = 3");
  const DistanceMatrix dist = validate(config);
  const Index m = dist.size();
  if (alpha.size() != m) throw ConfigurationError("alpha must have one entry per center");
  const std::set<Index> kset(K.begin(), K.end());
  for (Index k : kset) {
    if (k < 0 || k >= m) throw ConfigurationError("index " + std::to_string(k) + " out of range");
  }
  GerschgorinReport rep;
  rep.K.assign(kset.begin(), kset.end());
  rep.m_prime = static_cast<Index>(rep.K.size());
  rep.bound = rep.m_prime * config.multiplicity;
  bool first = true, second = true;
  for (Index k = 0; k < m; ++k) {
    double radius = 0.0;
    for (Index j = 0; j < m; ++j)
      if (j != k) radius += 1.0 / (4.0 * kPi * dist.r(j, k));
    const bool strict = alpha(k) < -radius;
    if (strict) rep.strict_indices.push_back(k);
    if (kset.count(k)) {
      first = first && strict;
    } else {
      second = second && alpha(k) >= radius;
    }
  }
  rep.lower_bound_holds = first;
  rep.exact = first && second;
  return rep;
}

EssentialSpectrum essential_spectrum(const PointConfiguration& config) {
  validate(config);
  EssentialSpectrum e;
  e.max_negative_eigenvalues = config.boundary_size();
  return e;
}

}  // namespace pointint
