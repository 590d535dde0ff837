// types.hpp — Shared scalar/matrix aliases and default tolerances.

#pragma once

#include <Eigen/Dense>

#include <complex>

namespace perilind {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

inline constexpr double kDefaultAtol = 1e-9;
inline constexpr double kDefaultRtol = 1e-9;

inline constexpr Complex kImag{0.0, 1.0};

}  // namespace perilind
