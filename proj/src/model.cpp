#include "pointint/model.hpp"

#include <cmath>
#include <sstream>

#include "pointint/errors.hpp"

namespace pointint {

PointConfiguration make_configuration(int dimension,
                                      const std::vector<std::vector<double>>& points,
                                      int multiplicity) {
  PointConfiguration config;
  config.dimension = dimension;
  config.multiplicity = multiplicity;
  config.points = RMatrix::Zero(dimension, static_cast<Index>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (static_cast<int>(points[j].size()) != dimension) {
      std::ostringstream msg;
      msg << "point " << j << " has " << points[j].size() << " coordinates, expected "
          << dimension;
      throw ConfigurationError(msg.str());
    }
    for (int a = 0; a < dimension; ++a) config.points(a, static_cast<Index>(j)) = points[j][a];
  }
  return config;
}

double DistanceMatrix::min_separation() const {
  double best = 0.0;
  for (Index j = 0; j < r.rows(); ++j) {
    for (Index k = j + 1; k < r.cols(); ++k) {
      if (best == 0.0 || r(j, k) < best) best = r(j, k);
    }
  }
  return best;
}

double DistanceMatrix::diameter() const { return r.size() == 0 ? 0.0 : r.maxCoeff(); }

DistanceMatrix validate(const PointConfiguration& config) {
  if (config.dimension != 2 && config.dimension != 3) {
    throw ConfigurationError("dimension must be 2 or 3");
  }
  if (config.points.rows() != config.dimension) {
    throw ConfigurationError("point coordinates do not match the dimension");
  }
  if (config.multiplicity < 1) throw ConfigurationError("multiplicity n must be >= 1");
  const Index m = config.sites();
  if (m < 1) throw ConfigurationError("at least one interaction center is required");

  for (Index j = 0; j < m; ++j) {
    if (!config.points.col(j).allFinite()) {
      throw DuplicateCentersError(j, j, "center " + std::to_string(j) + " has non-finite coordinates");
    }
  }

  DistanceMatrix dist;
  dist.r = RMatrix::Zero(m, m);
  for (Index j = 0; j < m; ++j) {
    for (Index k = j + 1; k < m; ++k) {
      const double r = (config.points.col(j) - config.points.col(k)).norm();
      dist.r(j, k) = r;
      dist.r(k, j) = r;
    }
  }
  const double guard = 1e-12 * dist.diameter();
  for (Index j = 0; j < m; ++j) {
    for (Index k = j + 1; k < m; ++k) {
      if (dist.r(j, k) <= guard) {
        std::ostringstream msg;
        msg << "duplicate_centers: centers " << j << " and " << k << " coincide";
        throw DuplicateCentersError(j, k, msg.str());
      }
    }
  }
  return dist;
}

const char* to_string(PairKind kind) {
  switch (kind) {
    case PairKind::general: return "general";
    case PairKind::operator_form: return "operator_form";
    case PairKind::diagonal_alpha: return "diagonal_alpha";
    case PairKind::friedrichs: return "friedrichs";
    case PairKind::krein: return "krein";
  }
  return "unknown";
}

BoundaryPair diagonal_family(const RVector& alpha, int multiplicity) {
  if (multiplicity < 1) throw ConfigurationError("multiplicity n must be >= 1");
  if (alpha.size() < 1) throw ConfigurationError("alpha must have one entry per center");
  BoundaryPair pair;
  const RMatrix block = alpha.asDiagonal();
  pair.C = expand_blocks(block, multiplicity).cast<Complex>();
  pair.D = CMatrix::Identity(pair.C.rows(), pair.C.cols());
  pair.kind = PairKind::diagonal_alpha;
  pair.alpha = alpha;
  return pair;
}

BoundaryPair diagonal_family(std::span<const double> alpha, int multiplicity) {
  return diagonal_family(RVector(Eigen::Map<const RVector>(alpha.data(), static_cast<Index>(alpha.size()))),
                         multiplicity);
}

BoundaryPair operator_pair(const CMatrix& B) {
  if (B.rows() != B.cols()) throw ConfigurationError("operator pair needs a square matrix");
  return {B, CMatrix::Identity(B.rows(), B.cols()), PairKind::operator_form, {}};
}

BoundaryPair friedrichs_pair(Index size) {
  return {CMatrix::Identity(size, size), CMatrix::Zero(size, size), PairKind::friedrichs, {}};
}

BoundaryPair general_pair(const CMatrix& C, const CMatrix& D) {
  if (C.rows() != C.cols() || D.rows() != D.cols() || C.rows() != D.rows()) {
    throw ConfigurationError("C and D must be square matrices of the same size");
  }
  return {C, D, PairKind::general, {}};
}

EMatrices e_matrices(const PointConfiguration& config) {
  const DistanceMatrix dist = validate(config);
  const Index m = dist.size();
  EMatrices e{RMatrix(m, m), RMatrix(m, m)};
  for (Index j = 0; j < m; ++j) {
    for (Index k = 0; k < m; ++k) {
      const double r = dist.r(j, k);
      const double decay = std::exp(-r);
      const double delta = (j == k) ? 1.0 : 0.0;
      e.E1(j, k) = decay;
      e.E0(j, k) = config.dimension == 3 ? -decay / (r - delta) : -decay * std::log(r + delta);
    }
  }
  return e;
}

}  // namespace pointint
