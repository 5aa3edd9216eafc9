#pragma once

#include <utility>
#include <vector>

#include "mvop/matrix2.hpp"

namespace mvop {

/// Polynomial in a real variable t with Matrix2 coefficients, stored densely
/// by degree index. The representation is normalized: trailing all-zero
/// coefficients are stripped, and the zero polynomial holds no coefficients.
class MatrixPolynomial {
public:
    MatrixPolynomial() = default;

    explicit MatrixPolynomial(std::vector<Matrix2> coeffs) : coeffs_(std::move(coeffs)) {
        strip();
    }

    /// The constant polynomial c0.
    explicit MatrixPolynomial(const Matrix2& c0) : coeffs_{c0} { strip(); }

    /// M * t^k.
    static MatrixPolynomial monomial(int k, const Matrix2& m) {
        std::vector<Matrix2> c(static_cast<std::size_t>(k) + 1);
        c.back() = m;
        return MatrixPolynomial(std::move(c));
    }

    /// Highest index with a nonzero coefficient; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of t^k; the zero matrix beyond the stored degree.
    Matrix2 coeff(int k) const {
        if (k < 0 || k > degree()) return Matrix2{};
        return coeffs_[static_cast<std::size_t>(k)];
    }

    void set_coeff(int k, const Matrix2& m) {
        if (static_cast<std::size_t>(k) >= coeffs_.size()) {
            coeffs_.resize(static_cast<std::size_t>(k) + 1);
        }
        coeffs_[static_cast<std::size_t>(k)] = m;
        strip();
    }

    const std::vector<Matrix2>& coeffs() const { return coeffs_; }

    /// Horner evaluation; exact for the stored degree.
    Matrix2 eval(double t) const {
        Matrix2 acc;
        for (int k = degree(); k >= 0; --k) {
            acc = t * acc + coeffs_[static_cast<std::size_t>(k)];
        }
        return acc;
    }

    /// d/dt: coefficient of t^k maps to k * (coefficient) at index k-1.
    MatrixPolynomial derivative() const {
        if (degree() < 1) return {};
        std::vector<Matrix2> d(coeffs_.size() - 1);
        for (int k = 1; k <= degree(); ++k) {
            d[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * coeffs_[static_cast<std::size_t>(k)];
        }
        return MatrixPolynomial(std::move(d));
    }

    /// Multiplication by t.
    MatrixPolynomial times_t() const {
        if (is_zero()) return {};
        std::vector<Matrix2> c(coeffs_.size() + 1);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k + 1] = coeffs_[k];
        return MatrixPolynomial(std::move(c));
    }

    /// M * P (constant matrix on the left of every coefficient).
    MatrixPolynomial left_mul(const Matrix2& m) const {
        std::vector<Matrix2> c(coeffs_.size());
        for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = m * coeffs_[k];
        return MatrixPolynomial(std::move(c));
    }

    /// P * M (constant matrix on the right of every coefficient).
    MatrixPolynomial right_mul(const Matrix2& m) const {
        std::vector<Matrix2> c(coeffs_.size());
        for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = coeffs_[k] * m;
        return MatrixPolynomial(std::move(c));
    }

    MatrixPolynomial scaled(double s) const {
        std::vector<Matrix2> c(coeffs_.size());
        for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = s * coeffs_[k];
        return MatrixPolynomial(std::move(c));
    }

    /// Largest absolute entry over all coefficients; 0 for the zero polynomial.
    double max_abs() const {
        double m = 0.0;
        for (const auto& c : coeffs_) m = std::max(m, c.max_abs());
        return m;
    }

    bool operator==(const MatrixPolynomial&) const = default;

private:
    void strip() {
        while (!coeffs_.empty() && coeffs_.back() == Matrix2{}) coeffs_.pop_back();
    }

    std::vector<Matrix2> coeffs_;
};

inline MatrixPolynomial operator+(const MatrixPolynomial& p, const MatrixPolynomial& q) {
    std::vector<Matrix2> c(static_cast<std::size_t>(std::max(p.degree(), q.degree()) + 1));
    for (int k = 0; k < static_cast<int>(c.size()); ++k) {
        c[static_cast<std::size_t>(k)] = p.coeff(k) + q.coeff(k);
    }
    return MatrixPolynomial(std::move(c));
}

inline MatrixPolynomial operator-(const MatrixPolynomial& p, const MatrixPolynomial& q) {
    return p + q.scaled(-1.0);
}

} // namespace mvop
