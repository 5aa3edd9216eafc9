#include "mvop/hypergeom.hpp"

#include <cmath>

#include "mvop/errors.hpp"

namespace mvop {

namespace {

Matrix2 next_symbol(const Matrix2& C, const Matrix2& U, const Matrix2& V, int n,
                    const Matrix2& prev) {
    const double nn = static_cast<double>(n);
    Matrix2 shifted = C;
    shifted.m11 += nn;
    shifted.m22 += nn;
    const Matrix2 rhs = nn * nn * Matrix2::identity() + nn * (U - Matrix2::identity()) + V;
    return inverse(shifted) * (rhs * prev);
}

} // namespace

H21Symbol::H21Symbol(const Matrix2& C, const Matrix2& U, const Matrix2& V)
    : C_(C), U_(U), V_(V), cache_{Matrix2::identity()} {}

const Matrix2& H21Symbol::symbol(int n) {
    while (static_cast<int>(cache_.size()) <= n) {
        const int k = static_cast<int>(cache_.size()) - 1;
        cache_.push_back(next_symbol(C_, U_, V_, k, cache_.back()));
    }
    return cache_[static_cast<std::size_t>(n)];
}

Matrix2 h21_symbol(const Matrix2& C, const Matrix2& U, const Matrix2& V, int n) {
    Matrix2 sym = Matrix2::identity();
    for (int k = 0; k < n; ++k) sym = next_symbol(C, U, V, k, sym);
    return sym;
}

Vec2 h21_eval(const Matrix2& C, const Matrix2& U, const Matrix2& V, Vec2 f0, double t,
              double tol) {
    if (!(std::abs(t) < 1.0)) throw DomainError("2H1 series requires |t| < 1");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

    constexpr int kMaxTerms = 10000;
    Vec2 sum = f0;  // k = 0 term
    Matrix2 sym = Matrix2::identity();
    double t_pow_over_fact = 1.0;
    int small_streak = 0;
    for (int k = 1; k <= kMaxTerms; ++k) {
        sym = next_symbol(C, U, V, k - 1, sym);
        t_pow_over_fact *= t / static_cast<double>(k);
        const Vec2 term = t_pow_over_fact * (sym * f0);
        sum = sum + term;
        if (max_abs(term) <= tol * max_abs(sum)) {
            if (++small_streak >= 3) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw NoConvergence("2H1 series did not meet the tolerance within 10^4 terms");
}

} // namespace mvop
