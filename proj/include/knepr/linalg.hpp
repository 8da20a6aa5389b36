#pragma once

#include <array>
#include <cmath>

#include "knepr/errors.hpp"

namespace knepr {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;
// Rank-3 array indexed [mu][i][j]; used for Gamma^lambda_{mu nu} (as
// [lambda][mu][nu]) and for the connection one-forms (as [mu][a][b]).
using Ten4 = std::array<Mat4, 4>;

// eta = diag(-1, 1, 1, 1)
inline constexpr double eta_sign(int a) { return a == 0 ? -1.0 : 1.0; }

inline Mat4 minkowski_eta() {
    Mat4 eta{};
    for (int a = 0; a < 4; ++a) eta[a][a] = eta_sign(a);
    return eta;
}

Mat4 identity4();
Mat4 matmul(const Mat4& a, const Mat4& b);
Vec4 matvec(const Mat4& m, const Vec4& v);
Mat4 transpose(const Mat4& m);
double max_abs(const Mat4& m);

// Gauss-Jordan with partial pivoting; throws SingularMatrix.
Mat4 invert4(const Mat4& m);

// exp(A) by scaling-and-squaring with a Taylor kernel.
Mat4 expm4(const Mat4& a);

inline double dot3(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm3(const Vec3& a) { return std::sqrt(dot3(a, a)); }

}  // namespace knepr
