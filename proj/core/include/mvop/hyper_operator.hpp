#pragma once

#include "mvop/matrix_polynomial.hpp"

namespace mvop {

/// Second-order differential operator
///
///     D = t(1-t) d^2/dt^2 + (C - tU) d/dt - V
///
/// with constant 2x2 coefficients. D acts with its matrix coefficients on the
/// left of a matrix polynomial, while eigenvalue matrices multiply on the
/// right: D P_n = P_n Lambda_n.
struct HypergeometricOperator {
    Matrix2 C;
    Matrix2 U;
    Matrix2 V;
};

/// t(1-t) P'' + (C - tU) P' - V P, computed coefficient-wise.
/// deg(D P) <= deg(P): the t^(d+1) terms of t^2 P'', tU P' and V P cancel
/// degree growth structurally.
inline MatrixPolynomial apply(const HypergeometricOperator& op, const MatrixPolynomial& p) {
    const MatrixPolynomial d1 = p.derivative();
    const MatrixPolynomial d2 = d1.derivative();
    MatrixPolynomial out = d2.times_t() - d2.times_t().times_t();  // t(1-t) P''
    out = out + d1.left_mul(op.C) - d1.left_mul(op.U).times_t();   // (C - tU) P'
    out = out - p.left_mul(op.V);                                  // -V P
    return out;
}

} // namespace mvop
