#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace elasto {

using cplx = std::complex<double>;

using Vec2 = Eigen::Vector2d;
using CVec2 = Eigen::Vector2cd;
using CMat2 = Eigen::Matrix2cd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx iu{0.0, 1.0};

// Rotation by +90 degrees; appears in the Cauchy part of K and in the matrix Hilbert transform.
inline CMat2 rot90() {
    CMat2 j;
    j << 0.0, -1.0, 1.0, 0.0;
    return j;
}

}  // namespace elasto
