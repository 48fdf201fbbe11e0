#pragma once

#include <random>
#include <vector>

#include "pointint/model.hpp"
#include "pointint/types.hpp"

// Shared random generators for the unit and acceptance tests.
namespace support {

using namespace pointint;

inline CMatrix random_complex(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix a(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) a(i, j) = Complex(g(rng), g(rng));
  return a;
}

inline CMatrix random_hermitian(Index n, std::mt19937_64& rng) {
  const CMatrix x = random_complex(n, n, rng);
  return 0.5 * (x + x.adjoint());
}

inline CMatrix random_unitary(Index n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<CMatrix> qr(random_complex(n, n, rng));
  return qr.householderQ() * CMatrix::Identity(n, n);
}

// m points uniformly in [-extent, extent]^d, resampled until every separation
// is at least min_sep.
inline PointConfiguration random_cloud(int d, Index m, double extent, double min_sep,
                                       std::mt19937_64& rng, int multiplicity = 1) {
  std::uniform_real_distribution<double> u(-extent, extent);
  PointConfiguration c;
  c.dimension = d;
  c.multiplicity = multiplicity;
  c.points = RMatrix(d, m);
  for (Index j = 0; j < m; ++j) {
    for (;;) {
      for (int a = 0; a < d; ++a) c.points(a, j) = u(rng);
      bool ok = true;
      for (Index k = 0; k < j && ok; ++k) ok = (c.points.col(j) - c.points.col(k)).norm() >= min_sep;
      if (ok) break;
    }
  }
  return c;
}

// Self-adjoint (C, D) with C = X U cos(L) U*, D = X U sin(L) U* for random
// invertible X, unitary U and angles L; about a third of the angles are zero
// so D is often singular.
inline BoundaryPair random_self_adjoint_pair(Index size, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(-1.5, 1.5);
  const CMatrix u = random_unitary(size, rng);
  RVector lc(size), ls(size);
  for (Index i = 0; i < size; ++i) {
    const double l = (rng() % 3 == 0) ? 0.0 : ang(rng);
    lc(i) = std::cos(l);
    ls(i) = std::sin(l);
  }
  CMatrix x = CMatrix::Identity(size, size) + 0.3 * random_complex(size, size, rng);
  BoundaryPair p;
  p.C = x * u * lc.cast<Complex>().asDiagonal() * u.adjoint();
  p.D = x * u * ls.cast<Complex>().asDiagonal() * u.adjoint();
  p.kind = PairKind::general;
  return p;
}

}  // namespace support
