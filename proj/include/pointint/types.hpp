#pragma once

#include <complex>

#include <Eigen/Dense>

namespace pointint {

using Index = Eigen::Index;
using Complex = std::complex<double>;

using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr Complex kI{0.0, 1.0};

}  // namespace pointint
