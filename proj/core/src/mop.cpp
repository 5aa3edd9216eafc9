#include "mvop/mop.hpp"

#include <cmath>
#include <sstream>

#include "mvop/errors.hpp"

namespace mvop {

namespace {

constexpr double kCollisionTol = 1e-12;

// [D,a]_k chain for one scalar eigenvalue a, k = n down to 0.
std::vector<Matrix2> bracket_chain(const ParamSet& params, const Matrix2& C, double a, int n) {
    std::vector<Matrix2> br(static_cast<std::size_t>(n) + 1);
    br[static_cast<std::size_t>(n)] = Matrix2::identity();
    for (int k = n - 1; k >= 0; --k) {
        const EigenPair ek = eigenvalue(params, k);
        const double dl = a - ek.lambda;
        const double dm = a - ek.mu;
        if (std::abs(dl) < kCollisionTol || std::abs(dm) < kCollisionTol) {
            std::ostringstream os;
            os << "eigenvalue gap below " << kCollisionTol << " at k = " << k;
            throw EigenvalueCollision(os.str());
        }
        Matrix2 kc = C;
        kc.m11 += k;
        kc.m22 += k;
        br[static_cast<std::size_t>(k)] =
            Matrix2::diagonal(1.0 / dl, 1.0 / dm) *
            (static_cast<double>(k + 1) * (kc * br[static_cast<std::size_t>(k) + 1]));
    }
    return br;
}

} // namespace

MatrixPolynomial monic_polynomial(const ParamSet& params, int n) {
    const HypergeometricOperator op = build_operator(params);
    const EigenPair en = eigenvalue(params, n);
    const auto bl = bracket_chain(params, op.C, en.lambda, n);
    const auto bm = bracket_chain(params, op.C, en.mu, n);
    std::vector<Matrix2> coeffs(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        // First column from the lambda chain, second from the mu chain.
        const Matrix2& l = bl[static_cast<std::size_t>(k)];
        const Matrix2& m = bm[static_cast<std::size_t>(k)];
        coeffs[static_cast<std::size_t>(k)] = Matrix2{l.m11, m.m12, l.m21, m.m22};
    }
    return MatrixPolynomial(std::move(coeffs));
}

std::pair<Matrix2, Matrix2> subleading_coeffs(const ParamSet& params, int n) {
    const Matrix2 C = build_operator(params).C;
    const double nn = static_cast<double>(n);
    const auto lam = [&](int k) { return eigenvalue(params, k).lambda; };
    const auto mu = [&](int k) { return eigenvalue(params, k).mu; };

    const Matrix2 first = nn * Matrix2{(C.m11 + nn - 1.0) / (lam(n) - lam(n - 1)),
                                       C.m12 / (mu(n) - lam(n - 1)),
                                       C.m21 / (lam(n) - mu(n - 1)),
                                       (C.m22 + nn - 1.0) / (mu(n) - mu(n - 1))};
    if (n < 2) return {first, Matrix2{}};

    const double c11 = C.m11, c12 = C.m12, c21 = C.m21, c22 = C.m22;
    const Matrix2 second =
        nn * (nn - 1.0) *
        Matrix2{(c11 + nn - 2.0) * (c11 + nn - 1.0) /
                        ((lam(n - 2) - lam(n)) * (lam(n - 1) - lam(n))) +
                    c12 * c21 / ((lam(n - 2) - lam(n)) * (mu(n - 1) - lam(n))),
                c12 * (c11 + nn - 2.0) / ((lam(n - 2) - mu(n)) * (lam(n - 1) - mu(n))) +
                    c12 * (c22 + nn - 1.0) / ((lam(n - 2) - mu(n)) * (mu(n - 1) - mu(n))),
                c21 * (c11 + nn - 1.0) / ((mu(n - 2) - lam(n)) * (lam(n - 1) - lam(n))) +
                    c21 * (c22 + nn - 2.0) / ((mu(n - 2) - lam(n)) * (mu(n - 1) - lam(n))),
                (c22 + nn - 2.0) * (c22 + nn - 1.0) /
                        ((mu(n - 2) - mu(n)) * (mu(n - 1) - mu(n))) +
                    c12 * c21 / ((mu(n - 2) - mu(n)) * (lam(n - 1) - mu(n)))};
    return {first, second};
}

RecurrencePair recurrence_from_poly(const ParamSet& params, int n) {
    const MatrixPolynomial pn = monic_polynomial(params, n);
    const MatrixPolynomial pn1 = monic_polynomial(params, n + 1);
    const Matrix2 b = pn.coeff(n - 1) - pn1.coeff(n);
    if (n == 0) return {Matrix2::identity(), b, 0};
    const Matrix2 a = pn.coeff(n - 2) - pn1.coeff(n - 1) -
                      pn.coeff(n - 1) * (pn.coeff(n - 1) - pn1.coeff(n));
    return {a, b, n};
}

RecurrencePair recurrence_closed(const ParamSet& params, int n) {
    const double al = params.alpha, be = params.beta, v = params.v;
    const double s = al + be;
    const double nn = static_cast<double>(n);

    const double b11 = -nn * ((al + nn + 1.0) * v + be - al) / ((s + 2.0 * nn + 2.0) * v) +
                       (nn + 1.0) * ((al + nn + 2.0) * v + be - al) / ((s + 2.0 * nn + 4.0) * v);
    const double b12 = (v + al - be) * (s - v + 2.0) /
                       (v * (s + 2.0 * nn - v + 2.0) * (s + 2.0 * nn - v + 4.0));
    const double b21 = (v - al + be) * (s + v + 2.0) /
                       (v * (s + 2.0 * nn + v + 2.0) * (s + 2.0 * nn + v + 4.0));
    const double b22 = -nn * ((al + nn + 1.0) * v - be + al) / ((s + 2.0 * nn + 2.0) * v) +
                       (nn + 1.0) * ((al + nn + 2.0) * v - be + al) / ((s + 2.0 * nn + 4.0) * v);
    const Matrix2 b{b11, b12, b21, b22};

    if (n == 0) return {Matrix2::identity(), b, 0};

    const double pref =
        nn * (al + nn + 1.0) * (be + nn + 1.0) * (s + nn + 2.0) /
        ((s + 2.0 * nn + v + 2.0) * (s + 2.0 * nn + 3.0) * (s + 2.0 * nn + 2.0) *
         (s + 2.0 * nn + 2.0) * (s + 2.0 * nn - v + 2.0) * (s + 2.0 * nn + 1.0));
    const Matrix2 a = pref * Matrix2::diagonal((v + 2.0 * nn + be + al) * (s + 2.0 * nn - v + 4.0),
                                               (-v + 2.0 * nn + be + al) * (s + 2.0 * nn + v + 4.0));
    return {a, b, n};
}

NormSequence norms(const ParamSet& params, int N, bool crosscheck) {
    const MatrixPolynomial one(Matrix2::identity());
    NormSequence s;
    s.reserve(static_cast<std::size_t>(N) + 1);
    s.push_back(inner_product(one, one, params));

    for (int n = 0; n <= N; ++n) {
        if (n > 0) s.push_back(s.back() * recurrence_closed(params, n).A);
        const Matrix2& sn = s.back();
        if (!(sn.m11 > 0.0) || !(sn.m22 > 0.0)) {
            std::ostringstream os;
            os << "S_" << n << " has a non-positive diagonal entry (" << sn.m11 << ", "
               << sn.m22 << ")";
            throw NormNotPositive(os.str());
        }
    }

    if (crosscheck) {
        // Strict relative agreement is only meaningful while S_n sits above
        // the floating noise floor of the moment route (S_n decays ~16^-n);
        // beyond that the rigorous error bound takes over.
        constexpr int kStrictMax = 4;
        for (int n = 0; n <= N; ++n) {
            const MatrixPolynomial pn = monic_polynomial(params, n);
            const Matrix2 ip = inner_product(pn, pn, params);
            const double diff = (ip - s[static_cast<std::size_t>(n)]).max_abs();
            const double bound =
                (n <= kStrictMax)
                    ? 1e-10 * s[static_cast<std::size_t>(n)].max_abs()
                    : std::max(1e-10 * s[static_cast<std::size_t>(n)].max_abs(),
                               inner_product_error_bound(pn, pn, params));
            if (diff > bound) {
                std::ostringstream os;
                os << "S_" << n << " disagrees with <P_n,P_n> by " << diff
                   << " (allowed " << bound << ")";
                throw NormNotPositive(os.str());
            }
        }
    }
    return s;
}

} // namespace mvop
