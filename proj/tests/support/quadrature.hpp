#pragma once

#include <cmath>
#include <functional>

namespace mvop::testing {

namespace detail {

inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive(const std::function<double(double)>& f, double a, double b, double fa,
                       double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, m, fa, flm, fm);
    const double right = simpson(f, m, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Adaptive Simpson on [a,b].
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    return detail::adaptive(f, a, b, fa, fm, fb, detail::simpson(f, a, b, fa, fm, fb), tol, 40);
}

/// Independent oracle for int_0^1 t^(alpha+k) (1-t)^beta dt. The substitution
/// t = sin^2(theta) turns the integrand into
/// 2 sin^(2(alpha+k)+1) cos^(2 beta+1) on [0, pi/2], smooth for
/// alpha, beta >= -1/2, so plain adaptive Simpson applies.
inline double moment_by_quadrature(double alpha, double beta, int k) {
    const double pe = 2.0 * (alpha + k) + 1.0;
    const double qe = 2.0 * beta + 1.0;
    return integrate(
        [pe, qe](double th) {
            const double s = std::sin(th), c = std::cos(th);
            return 2.0 * std::pow(s, pe) * std::pow(c, qe);
        },
        0.0, std::asin(1.0));
}

} // namespace mvop::testing
