#pragma once

#include <algorithm>
#include <cmath>

#include "mvop/errors.hpp"

namespace mvop {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }

inline double max_abs(Vec2 a) { return std::max(std::abs(a.x), std::abs(a.y)); }

/// Real 2x2 matrix, row-major. Immutable value semantics: every operation
/// returns a new matrix.
struct Matrix2 {
    double m11 = 0.0;
    double m12 = 0.0;
    double m21 = 0.0;
    double m22 = 0.0;

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Matrix2 diagonal(double a, double d) { return {a, 0.0, 0.0, d}; }

    Matrix2 transpose() const { return {m11, m21, m12, m22}; }
    double det() const { return m11 * m22 - m12 * m21; }
    double trace() const { return m11 + m22; }

    double max_abs() const {
        return std::max(std::max(std::abs(m11), std::abs(m12)),
                        std::max(std::abs(m21), std::abs(m22)));
    }

    bool all_finite() const {
        return std::isfinite(m11) && std::isfinite(m12) &&
               std::isfinite(m21) && std::isfinite(m22);
    }

    Vec2 col(int j) const { return j == 0 ? Vec2{m11, m21} : Vec2{m12, m22}; }

    bool operator==(const Matrix2&) const = default;
};

inline Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
    return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}

inline Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
    return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
}

inline Matrix2 operator-(const Matrix2& a) {
    return {-a.m11, -a.m12, -a.m21, -a.m22};
}

inline Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

inline Matrix2 operator*(double s, const Matrix2& a) {
    return {s * a.m11, s * a.m12, s * a.m21, s * a.m22};
}

inline Matrix2 operator*(const Matrix2& a, double s) { return s * a; }

inline Vec2 operator*(const Matrix2& a, Vec2 v) {
    return {a.m11 * v.x + a.m12 * v.y, a.m21 * v.x + a.m22 * v.y};
}

/// Inverse with a scale-aware singularity guard: a determinant at or below
/// 1e-13 * max(1, |A|_max^2) signals invalid input rather than a numerical
/// edge to absorb.
inline Matrix2 inverse(const Matrix2& a) {
    const double d = a.det();
    const double scale = std::max(1.0, a.max_abs() * a.max_abs());
    if (std::abs(d) <= 1e-13 * scale) {
        throw SingularMatrix("2x2 matrix is singular to working precision");
    }
    return {a.m22 / d, -a.m12 / d, -a.m21 / d, a.m11 / d};
}

} // namespace mvop
