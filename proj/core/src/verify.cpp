#include "mvop/verify.hpp"

#include <array>
#include <cmath>

#include "mvop/errors.hpp"
#include "mvop/mop.hpp"

namespace mvop {

namespace {

MatrixPolynomial weight_poly_part(const WeightSpec& w) {
    return MatrixPolynomial({w.W0, w.W1, w.W2});
}

// t(1-t) * P
MatrixPolynomial times_t_one_minus_t(const MatrixPolynomial& p) {
    return p.times_t() - p.times_t().times_t();
}

// P * (C - tU) with the polynomial on the left.
MatrixPolynomial right_mul_pencil(const MatrixPolynomial& p, const Matrix2& C, const Matrix2& U) {
    return p.right_mul(C) - p.right_mul(U).times_t();
}

// (C - tU)^T * P with the polynomial on the right.
MatrixPolynomial left_mul_pencil_t(const MatrixPolynomial& p, const Matrix2& C, const Matrix2& U) {
    return p.left_mul(C.transpose()) - p.left_mul(U.transpose()).times_t();
}

} // namespace

SymmetryReport check_symmetry(const ParamSet& params, double tol) {
    return check_symmetry(build_weight(params), build_operator(params), tol);
}

SymmetryReport check_symmetry(const WeightSpec& w, const HypergeometricOperator& op,
                              double tol) {
    const double a = w.alpha, b = w.beta;
    const MatrixPolynomial p = weight_poly_part(w);
    const double scale = std::max(p.max_abs(), 1.0);

    // eq1 on polynomial parts, using
    // (t^(a+1)(1-t)^(b+1) p)' = t^a (1-t)^b [ (a+1)(1-t)p - (b+1)t p + t(1-t)p' ].
    const MatrixPolynomial dp = p.derivative();
    const MatrixPolynomial lhs1 =
        (p.scaled(a + 1.0) - p.times_t().scaled(a + b + 2.0) + times_t_one_minus_t(dp)).scaled(2.0);
    const MatrixPolynomial rhs1 = right_mul_pencil(p, op.C, op.U) + left_mul_pencil_t(p, op.C, op.U);
    const double r1 = (lhs1 - rhs1).max_abs() / scale;

    // Skew part s = p(C-tU) - (C-tU)^T p and its closed form 2v(t^2 - t)J.
    const MatrixPolynomial skew = right_mul_pencil(p, op.C, op.U) - left_mul_pencil_t(p, op.C, op.U);
    const double v = op.V.m11 - op.V.m22;  // diag(v,0) + v2 I
    const Matrix2 J{0.0, 1.0, -1.0, 0.0};
    const MatrixPolynomial skew_closed =
        MatrixPolynomial({Matrix2{}, (-2.0 * v) * J, (2.0 * v) * J});
    const double r_skew = (skew - skew_closed).max_abs() / scale;

    // eq2: a(1-t)s - b t s + t(1-t)s' = 2 t(1-t) (V^T p - p V) on polynomial
    // parts (both sides carry t^(a-1)(1-t)^(b-1)).
    const MatrixPolynomial ds = skew.derivative();
    const MatrixPolynomial lhs2 =
        skew.scaled(a) - skew.times_t().scaled(a + b) + times_t_one_minus_t(ds);
    const MatrixPolynomial vcomm = p.left_mul(op.V.transpose()) - p.right_mul(op.V);
    const MatrixPolynomial rhs2 = times_t_one_minus_t(vcomm).scaled(2.0);
    const double r2 = (lhs2 - rhs2).max_abs() / scale;

    // Boundary decay, sampled near the endpoints. Both limits in question
    // vanish like t^(a+1) (resp. (1-t)^(b+1)) times a bounded factor.
    SymmetryReport rep;
    const double t0 = 1e-4, t1 = 1.0 - 1e-4;
    const auto boundary_norm = [&](double t) {
        const Matrix2 wt = weight_eval(w, t);
        const Matrix2 pencil = op.C - t * op.U;
        const Matrix2 skew_val = wt * pencil - pencil.transpose() * wt;
        return std::max((t * (1.0 - t) * wt).max_abs(), skew_val.max_abs());
    };
    rep.boundary_0 = boundary_norm(t0);
    rep.boundary_1 = boundary_norm(t1);
    rep.boundary_bound_0 = 10.0 * scale * std::pow(t0, a + 1.0);
    rep.boundary_bound_1 = 10.0 * scale * std::pow(1.0 - t1, b + 1.0);

    rep.residual_eq1 = r1;
    rep.residual_eq2 = r2;
    rep.residual_skew = r_skew;
    rep.pass = r1 <= tol && r2 <= tol && r_skew <= tol &&
               rep.boundary_0 <= rep.boundary_bound_0 && rep.boundary_1 <= rep.boundary_bound_1;
    return rep;
}

namespace {

// Eigen-decomposition of a symmetric 4x4 by cyclic Jacobi rotations.
// a is overwritten; eigenvectors land in the columns of vec.
void jacobi_eigen4(std::array<std::array<double, 4>, 4>& a, std::array<double, 4>& val,
                   std::array<std::array<double, 4>, 4>& vec) {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) vec[i][j] = (i == j) ? 1.0 : 0.0;
    }
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) off += a[i][j] * a[i][j];
        }
        if (off < 1e-300) break;
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = ((theta >= 0.0) ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 4; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 4; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < 4; ++k) {
                    const double vkp = vec[k][p], vkq = vec[k][q];
                    vec[k][p] = c * vkp - s * vkq;
                    vec[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    for (int i = 0; i < 4; ++i) val[i] = a[i][i];
}

} // namespace

CommutantReport commutant_of(const std::vector<Matrix2>& mats, double sv_tol) {
    // Null space of X -> (XM - MX)_M over vec(X) = (x11, x12, x21, x22),
    // via the 4x4 Gram matrix of the stacked system: singular values are
    // square roots of its eigenvalues, shared eigenvectors.
    std::array<std::array<double, 4>, 4> gram{};
    for (const Matrix2& m : mats) {
        // Entries of XM - MX as linear functionals of vec(X).
        const double r11[4] = {0.0, m.m21, -m.m12, 0.0};
        const double r12[4] = {m.m12, m.m22 - m.m11, 0.0, -m.m12};
        const double r21[4] = {-m.m21, 0.0, m.m11 - m.m22, m.m21};
        const double r22[4] = {0.0, -m.m21, m.m12, 0.0};
        const double* rs[4] = {r11, r12, r21, r22};
        for (const double* r : rs) {
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += r[i] * r[j];
            }
        }
    }

    std::array<double, 4> val{};
    std::array<std::array<double, 4>, 4> vec{};
    jacobi_eigen4(gram, val, vec);

    double sigma_max = 0.0;
    std::array<double, 4> sigma{};
    for (int i = 0; i < 4; ++i) {
        sigma[static_cast<std::size_t>(i)] = std::sqrt(std::max(val[static_cast<std::size_t>(i)], 0.0));
        sigma_max = std::max(sigma_max, sigma[static_cast<std::size_t>(i)]);
    }

    CommutantReport rep;
    for (int i = 0; i < 4; ++i) {
        if (sigma[static_cast<std::size_t>(i)] <= sv_tol * sigma_max) {
            Matrix2 basis_elem{vec[0][static_cast<std::size_t>(i)], vec[1][static_cast<std::size_t>(i)],
                               vec[2][static_cast<std::size_t>(i)], vec[3][static_cast<std::size_t>(i)]};
            const double norm = basis_elem.max_abs();
            if (norm > 0.0) basis_elem = (1.0 / norm) * basis_elem;
            rep.basis.push_back(basis_elem);
        }
    }
    rep.dimension = static_cast<int>(rep.basis.size());
    return rep;
}

CommutantReport commutant(const ParamSet& params, int N, double sv_tol) {
    std::vector<Matrix2> mats;
    mats.reserve(2 * static_cast<std::size_t>(N + 1));
    for (int n = 0; n <= N; ++n) {
        const RecurrencePair r = recurrence_closed(params, n);
        mats.push_back(r.A);
        mats.push_back(r.B);
    }
    CommutantReport rep = commutant_of(mats, sv_tol);
    rep.depth = N;
    return rep;
}

HypergeometricOperator conjugate(const HypergeometricOperator& op, const Matrix2& m) {
    const Matrix2 mi = inverse(m);
    return {mi * op.C * m, mi * op.U * m, mi * op.V * m};
}

namespace {

bool intertwines(const HypergeometricOperator& op1, const HypergeometricOperator& op2,
                 const Matrix2& m, double tol) {
    const double scale = std::max({op1.C.max_abs(), op1.U.max_abs(), op1.V.max_abs(), 1.0}) *
                         std::max(m.max_abs(), 1.0);
    return (op1.C * m - m * op2.C).max_abs() <= tol * scale &&
           (op1.U * m - m * op2.U).max_abs() <= tol * scale &&
           (op1.V * m - m * op2.V).max_abs() <= tol * scale;
}

} // namespace

std::optional<Matrix2> equivalence_params(const HypergeometricOperator& op1,
                                          const HypergeometricOperator& op2, double tol) {
    const double scale =
        std::max({op1.V.max_abs(), op2.V.max_abs(), op1.U.max_abs(), op2.U.max_abs(), 1.0});

    // U must be the same scalar on both sides; a scalar commutes with any M.
    const bool u_scalar = std::abs(op1.U.m12) <= tol * scale && std::abs(op1.U.m21) <= tol * scale &&
                          std::abs(op2.U.m12) <= tol * scale && std::abs(op2.U.m21) <= tol * scale &&
                          std::abs(op1.U.m11 - op1.U.m22) <= tol * scale &&
                          std::abs(op2.U.m11 - op2.U.m22) <= tol * scale;
    if (!u_scalar || std::abs(op1.U.m11 - op2.U.m11) > tol * scale) return std::nullopt;

    // V diagonal and nonscalar on both sides.
    if (std::abs(op1.V.m12) > tol * scale || std::abs(op1.V.m21) > tol * scale ||
        std::abs(op2.V.m12) > tol * scale || std::abs(op2.V.m21) > tol * scale) {
        return std::nullopt;
    }
    if (std::abs(op1.V.m11 - op1.V.m22) <= tol * scale ||
        std::abs(op2.V.m11 - op2.V.m22) <= tol * scale) {
        return std::nullopt;
    }

    // Intertwining a diagonal nonscalar V: either the spectra match in order
    // (M diagonal) or swapped (M antidiagonal); anything else has no M.
    if (std::abs(op1.V.m11 - op2.V.m11) <= tol * scale &&
        std::abs(op1.V.m22 - op2.V.m22) <= tol * scale) {
        if (std::abs(op2.C.m21) <= tol) return std::nullopt;
        const Matrix2 m = Matrix2::diagonal(1.0, op1.C.m21 / op2.C.m21);
        if (intertwines(op1, op2, m, tol)) return m;
        return std::nullopt;
    }
    if (std::abs(op1.V.m11 - op2.V.m22) <= tol * scale &&
        std::abs(op1.V.m22 - op2.V.m11) <= tol * scale) {
        if (std::abs(op2.C.m12) <= tol) return std::nullopt;
        const Matrix2 m{0.0, 1.0, op1.C.m21 / op2.C.m12, 0.0};
        if (intertwines(op1, op2, m, tol)) return m;
        return std::nullopt;
    }
    return std::nullopt;
}

ParamSet gegenbauer_params(double p, double q) {
    if (!(p > 0.0) || !(p < q)) {
        throw ParamOutOfWindow(ParamOutOfWindow::Side::nonfinite,
                               "gegenbauer map requires 0 < p < q");
    }
    // p = q/2 gives v = 0, excluded by the window's lower bound.
    return validate_params(q / 2.0 - 1.0, q / 2.0 - 1.0, 2.0 * p - q, q - p);
}

double gegenbauer_weight_residual(double p, double q, int grid_points, double* fitted_scale) {
    const ParamSet params = gegenbauer_params(p, q);
    const WeightSpec w = build_weight(params);
    const double two_pow = std::pow(2.0, q - 1.0);

    std::vector<Matrix2> lhs(static_cast<std::size_t>(grid_points) - 1);
    std::vector<Matrix2> rhs(static_cast<std::size_t>(grid_points) - 1);
    long double dot = 0.0L, nrm = 0.0L;
    for (int i = 1; i < grid_points; ++i) {
        const double t = static_cast<double>(i) / grid_points;
        const double x = 1.0 - 2.0 * t;
        const double pref = std::pow(1.0 - x * x, q / 2.0 - 1.0);
        const Matrix2 l = pref * Matrix2{p * x * x + q - p, -q * x, -q * x, (q - p) * x * x + p};
        const Matrix2 r = two_pow * weight_eval(w, t);
        lhs[static_cast<std::size_t>(i) - 1] = l;
        rhs[static_cast<std::size_t>(i) - 1] = r;
        dot += static_cast<long double>(l.m11) * r.m11 + static_cast<long double>(l.m12) * r.m12 +
               static_cast<long double>(l.m21) * r.m21 + static_cast<long double>(l.m22) * r.m22;
        nrm += static_cast<long double>(r.m11) * r.m11 + static_cast<long double>(r.m12) * r.m12 +
               static_cast<long double>(r.m21) * r.m21 + static_cast<long double>(r.m22) * r.m22;
    }
    const double c = (nrm > 0.0L) ? static_cast<double>(dot / nrm) : 1.0;
    if (fitted_scale != nullptr) *fitted_scale = c;

    double worst = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        const double scale = std::max(lhs[i].max_abs(), 1e-300);
        worst = std::max(worst, (lhs[i] - c * rhs[i]).max_abs() / scale);
    }
    return worst;
}

} // namespace mvop
