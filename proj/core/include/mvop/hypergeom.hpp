#pragma once

#include <vector>

#include "mvop/matrix2.hpp"

namespace mvop {

/// The symbol sequence of the matrix hypergeometric function 2H1(U,V;C;t):
///
///     [C,U,V]_0 = I,
///     [C,U,V]_{n+1} = (C+n)^{-1} (n^2 + n(U-1) + V) [C,U,V]_n.
///
/// Requires no eigenvalue of C in {0, -1, -2, ...}; a singular C+n throws
/// SingularMatrix. The cache is append-only; after construction concurrent
/// readers of already-computed symbols are safe.
class H21Symbol {
public:
    H21Symbol(const Matrix2& C, const Matrix2& U, const Matrix2& V);

    /// [C,U,V]_n, extending the cache as needed.
    const Matrix2& symbol(int n);

private:
    Matrix2 C_, U_, V_;
    std::vector<Matrix2> cache_;
};

/// Single symbol without a cache (pure).
Matrix2 h21_symbol(const Matrix2& C, const Matrix2& U, const Matrix2& V, int n);

/// F(t) = sum_k t^k/k! [C,U,V]_k F0 for |t| < 1. Terms are added until the
/// term norm stays below tol * (current sum norm) for 3 consecutive terms;
/// matrix series terms can dip to zero non-monotonically, so a single small
/// term is not trusted. A hard cap of 10^4 terms throws NoConvergence.
Vec2 h21_eval(const Matrix2& C, const Matrix2& U, const Matrix2& V, Vec2 f0, double t,
              double tol);

} // namespace mvop
