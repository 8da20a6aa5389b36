#include "knepr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace knepr {

Mat4 identity4() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
    return m;
}

Mat4 matmul(const Mat4& a, const Mat4& b) {
    Mat4 c{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const double aik = a[i][k];
            for (int j = 0; j < 4; ++j) c[i][j] += aik * b[k][j];
        }
    return c;
}

Vec4 matvec(const Mat4& m, const Vec4& v) {
    Vec4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += m[i][j] * v[j];
    return r;
}

Mat4 transpose(const Mat4& m) {
    Mat4 t{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i][j] = m[j][i];
    return t;
}

double max_abs(const Mat4& m) {
    double mx = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) mx = std::max(mx, std::fabs(m[i][j]));
    return mx;
}

Mat4 invert4(const Mat4& m) {
    // augmented Gauss-Jordan
    Mat4 a = m;
    Mat4 inv = identity4();
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 4; ++row)
            if (std::fabs(a[row][col]) > std::fabs(a[pivot][col])) pivot = row;
        if (a[pivot][col] == 0.0) throw SingularMatrix("4x4 matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const double scale = 1.0 / a[col][col];
        for (int j = 0; j < 4; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (int row = 0; row < 4; ++row) {
            if (row == col) continue;
            const double f = a[row][col];
            if (f == 0.0) continue;
            for (int j = 0; j < 4; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

Mat4 expm4(const Mat4& a) {
    // Scale so the norm is comfortably below 1, Taylor-sum to machine
    // precision, then undo the scaling by repeated squaring.
    const double nrm = max_abs(a);
    int squarings = 0;
    double scale = 1.0;
    while (nrm * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    Mat4 as{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) as[i][j] = a[i][j] * scale;

    Mat4 result = identity4();
    Mat4 term = identity4();
    for (int k = 1; k <= 24; ++k) {
        term = matmul(term, as);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) term[i][j] /= static_cast<double>(k);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) result[i][j] += term[i][j];
        if (max_abs(term) < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) result = matmul(result, result);
    return result;
}

}  // namespace knepr
