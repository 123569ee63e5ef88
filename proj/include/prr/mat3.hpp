#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

namespace prr {

/// Dense 3x3 matrix, row-major. Small enough that everything stays inline.
struct Mat3 {
    std::array<double, 9> m{};

    double& operator()(std::size_t r, std::size_t c) { return m[3 * r + c]; }
    double operator()(std::size_t r, std::size_t c) const { return m[3 * r + c]; }

    static Mat3 zero() { return {}; }

    static Mat3 diagonal(double d0, double d1, double d2) {
        Mat3 a;
        a(0, 0) = d0;
        a(1, 1) = d1;
        a(2, 2) = d2;
        return a;
    }

    /// Determinant by direct cofactor expansion along the first row.
    double det() const {
        return m[0] * (m[4] * m[8] - m[5] * m[7])
             - m[1] * (m[3] * m[8] - m[5] * m[6])
             + m[2] * (m[3] * m[7] - m[4] * m[6]);
    }
};

inline std::array<double, 3> operator*(const Mat3& a, const std::array<double, 3>& v) {
    return {a(0, 0) * v[0] + a(0, 1) * v[1] + a(0, 2) * v[2],
            a(1, 0) * v[0] + a(1, 1) * v[1] + a(1, 2) * v[2],
            a(2, 0) * v[0] + a(2, 1) * v[1] + a(2, 2) * v[2]};
}

/// Solve a*x = rhs by Gaussian elimination with partial pivoting.
/// Returns false when a pivot vanishes exactly.
inline bool solve3(Mat3 a, std::array<double, 3> rhs, std::array<double, 3>& x) {
    std::array<std::size_t, 3> p{0, 1, 2};
    for (std::size_t k = 0; k < 3; ++k) {
        std::size_t best = k;
        for (std::size_t r = k + 1; r < 3; ++r)
            if (std::abs(a(p[r], k)) > std::abs(a(p[best], k))) best = r;
        std::swap(p[k], p[best]);
        const double piv = a(p[k], k);
        if (piv == 0.0) return false;
        for (std::size_t r = k + 1; r < 3; ++r) {
            const double f = a(p[r], k) / piv;
            for (std::size_t c = k; c < 3; ++c) a(p[r], c) -= f * a(p[k], c);
            rhs[p[r]] -= f * rhs[p[k]];
        }
    }
    for (std::size_t k = 3; k-- > 0;) {
        double s = rhs[p[k]];
        for (std::size_t c = k + 1; c < 3; ++c) s -= a(p[k], c) * x[c];
        x[k] = s / a(p[k], k);
    }
    return true;
}

/// Inverse via the adjugate; det_out receives the determinant.
/// Returns identity-sized garbage if det == 0 (check det_out).
inline Mat3 inverse3(const Mat3& a, double& det_out) {
    Mat3 inv;
    inv(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
    inv(0, 1) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
    inv(0, 2) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
    inv(1, 0) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
    inv(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
    inv(1, 2) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
    inv(2, 0) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
    inv(2, 1) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
    inv(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    det_out = a(0, 0) * inv(0, 0) + a(0, 1) * inv(1, 0) + a(0, 2) * inv(2, 0);
    if (det_out != 0.0)
        for (double& v : inv.m) v /= det_out;
    return inv;
}

/// Maximum absolute column sum.
inline double norm1(const Mat3& a) {
    double best = 0.0;
    for (std::size_t c = 0; c < 3; ++c) {
        const double s = std::abs(a(0, c)) + std::abs(a(1, c)) + std::abs(a(2, c));
        if (s > best) best = s;
    }
    return best;
}

/// 1-norm condition estimate; +inf for an exactly singular matrix.
inline double cond1_estimate(const Mat3& a) {
    double det = 0.0;
    const Mat3 inv = inverse3(a, det);
    if (det == 0.0) return std::numeric_limits<double>::infinity();
    return norm1(a) * norm1(inv);
}

}  // namespace prr
