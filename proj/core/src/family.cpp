#include "mvop/family.hpp"

#include <cmath>
#include <sstream>

#include "mvop/errors.hpp"

namespace mvop {

ParamSet validate_params(double alpha, double beta, double v, double v2) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(v) || !std::isfinite(v2)) {
        throw ParamOutOfWindow(ParamOutOfWindow::Side::nonfinite,
                               "parameters must be finite");
    }
    const double lower = std::abs(alpha - beta);
    const double upper = alpha + beta + 2.0;
    const double mid = std::abs(v);
    if (!(lower < mid)) {
        std::ostringstream os;
        os << "|alpha-beta| = " << lower << " must be < |v| = " << mid;
        throw ParamOutOfWindow(ParamOutOfWindow::Side::lower, os.str());
    }
    if (!(mid < upper)) {
        std::ostringstream os;
        os << "|v| = " << mid << " must be < alpha+beta+2 = " << upper;
        throw ParamOutOfWindow(ParamOutOfWindow::Side::upper, os.str());
    }
    return ParamSet{alpha, beta, v, v2};
}

EigenPair eigenvalue(const ParamSet& p, int n) {
    const double nn = static_cast<double>(n);
    const double base = -nn * (nn - 1.0) - nn * (p.alpha + p.beta + 4.0) - p.v2;
    return EigenPair{base - p.v, base, n};
}

namespace {

// Weight matrices without the construction-time scan; shared with the moment
// route, which must stay usable on deliberately out-of-window fixtures.
WeightSpec weight_parts(const ParamSet& p) {
    const double a = p.alpha, b = p.beta, v = p.v;
    const double s = a + b;
    WeightSpec w;
    w.alpha = a;
    w.beta = b;
    w.W2 = Matrix2::diagonal(v * (v + 2.0 + s) / (v + a - b),
                             v * (-v + 2.0 + s) / (v - a + b));
    w.W1 = Matrix2{-(v + s + 2.0), s + 2.0, s + 2.0, -(-v + s + 2.0)};
    w.W0 = (a + 1.0) * Matrix2{1.0, -1.0, -1.0, 1.0};
    return w;
}

} // namespace

WeightSpec build_weight(const ParamSet& p) {
    const WeightSpec w = weight_parts(p);

    // Positivity scan on an interior grid. The window guarantees positive
    // determinant and positive (1,1) entry for either sign of v, so a trip
    // here is a loud formula/input error.
    const int kScanPoints = 201;
    for (int i = 1; i < kScanPoints; ++i) {
        const double t = static_cast<double>(i) / kScanPoints;
        const Matrix2 wt = weight_eval(w, t);
        if (!(wt.m11 > 0.0) || !(wt.det() > 0.0)) {
            std::ostringstream os;
            os << "weight not positive definite at t = " << t
               << " (w11 = " << wt.m11 << ", det = " << wt.det() << ")";
            throw WeightNotPositive(os.str());
        }
    }
    return w;
}

Matrix2 weight_eval(const WeightSpec& w, double t) {
    if (!(t > 0.0) || !(t < 1.0)) {
        throw DomainError("weight is defined on the open interval (0,1)");
    }
    const double scale = std::pow(t, w.alpha) * std::pow(1.0 - t, w.beta);
    return scale * (t * t * w.W2 + t * w.W1 + w.W0);
}

double weight_det(const WeightSpec& w, double t) {
    return std::pow(t, 2.0 * (w.alpha + 1.0)) * std::pow(1.0 - t, 2.0 * (w.beta + 1.0)) *
           w.W2.det();
}

double moment(const ParamSet& p, int k) {
    return moment_table(p, k).back();
}

std::vector<double> moment_table(const ParamSet& p, int kmax) {
    const double a = p.alpha, b = p.beta;
    std::vector<double> mu(static_cast<std::size_t>(kmax) + 1);
    mu[0] = std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
    for (int k = 0; k < kmax; ++k) {
        mu[static_cast<std::size_t>(k) + 1] =
            mu[static_cast<std::size_t>(k)] * (a + k + 1.0) / (a + b + k + 2.0);
    }
    return mu;
}

namespace {

// Bilinear-form core shared by inner_product and its error bound. The exact
// value can sit 20+ orders of magnitude below the individual terms (the
// squared norms decay like 16^-n), so the accumulation runs in long double
// and the caller can also request the running |term| sum.
void accumulate_inner_product(const MatrixPolynomial& p, const MatrixPolynomial& q,
                              const ParamSet& params, long double sum[4],
                              long double abs_sum[4]) {
    for (int i = 0; i < 4; ++i) sum[i] = abs_sum[i] = 0.0L;
    const int dp = p.degree(), dq = q.degree();
    if (dp < 0 || dq < 0) return;

    const WeightSpec w = weight_parts(params);
    const std::vector<double> mu = moment_table(params, dp + dq + 2);

    const long double w2[4] = {w.W2.m11, w.W2.m12, w.W2.m21, w.W2.m22};
    const long double w1[4] = {w.W1.m11, w.W1.m12, w.W1.m21, w.W1.m22};
    const long double w0[4] = {w.W0.m11, w.W0.m12, w.W0.m21, w.W0.m22};

    for (int i = 0; i <= dp; ++i) {
        const Matrix2 pi = p.coeff(i);
        const long double pt[4] = {pi.m11, pi.m21, pi.m12, pi.m22};  // P_i^T
        for (int j = 0; j <= dq; ++j) {
            const Matrix2 qj = q.coeff(j);
            const long double qv[4] = {qj.m11, qj.m12, qj.m21, qj.m22};
            const long double m2 = mu[static_cast<std::size_t>(i + j) + 2];
            const long double m1 = mu[static_cast<std::size_t>(i + j) + 1];
            const long double m0 = mu[static_cast<std::size_t>(i + j)];
            long double mid[4];
            for (int e = 0; e < 4; ++e) mid[e] = m2 * w2[e] + m1 * w1[e] + m0 * w0[e];
            // T = P_i^T * mid * Q_j
            long double pm[4] = {pt[0] * mid[0] + pt[1] * mid[2], pt[0] * mid[1] + pt[1] * mid[3],
                                 pt[2] * mid[0] + pt[3] * mid[2], pt[2] * mid[1] + pt[3] * mid[3]};
            const long double t11 = pm[0] * qv[0] + pm[1] * qv[2];
            const long double t12 = pm[0] * qv[1] + pm[1] * qv[3];
            const long double t21 = pm[2] * qv[0] + pm[3] * qv[2];
            const long double t22 = pm[2] * qv[1] + pm[3] * qv[3];
            sum[0] += t11; sum[1] += t12; sum[2] += t21; sum[3] += t22;
            abs_sum[0] += std::abs(t11); abs_sum[1] += std::abs(t12);
            abs_sum[2] += std::abs(t21); abs_sum[3] += std::abs(t22);
        }
    }
}

} // namespace

Matrix2 inner_product(const MatrixPolynomial& p, const MatrixPolynomial& q,
                      const ParamSet& params) {
    long double sum[4], abs_sum[4];
    accumulate_inner_product(p, q, params, sum, abs_sum);
    return Matrix2{static_cast<double>(sum[0]), static_cast<double>(sum[1]),
                   static_cast<double>(sum[2]), static_cast<double>(sum[3])};
}

double inner_product_error_bound(const MatrixPolynomial& p, const MatrixPolynomial& q,
                                 const ParamSet& params) {
    long double sum[4], abs_sum[4];
    accumulate_inner_product(p, q, params, sum, abs_sum);
    const long double worst = std::max(std::max(abs_sum[0], abs_sum[1]),
                                       std::max(abs_sum[2], abs_sum[3]));
    // gamma_m bound with m ~ ops per entry; inputs are double so the bound is
    // driven by double epsilon even though the accumulation is long double.
    const int terms = (p.degree() + 1) * (q.degree() + 1);
    const long double gamma = 8.0L * terms * 2.220446049250313e-16L;
    return static_cast<double>(gamma * worst);
}

HypergeometricOperator build_operator(const ParamSet& p) {
    const double a = p.alpha, b = p.beta, v = p.v;
    HypergeometricOperator op;
    op.C = Matrix2{a + 2.0 - (a - b) / v, (v + a - b) / v,
                   (v - a + b) / v, a + 2.0 + (a - b) / v};
    op.U = (a + b + 4.0) * Matrix2::identity();
    op.V = Matrix2::diagonal(v + p.v2, p.v2);
    return op;
}

} // namespace mvop
