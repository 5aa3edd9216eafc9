#pragma once

#include <vector>

#include "mvop/hyper_operator.hpp"
#include "mvop/matrix_polynomial.hpp"

namespace mvop {

/// Admissible parameter triple (alpha, beta, v) plus the eigenvalue shift v2.
/// Instances are produced by validate_params, which enforces the window
///
///     |alpha - beta| < |v| < alpha + beta + 2
///
/// with strict floating comparisons and no epsilon slack. The window forces
/// v != 0 and alpha, beta > -1. v2 shifts the operator's V and both scalar
/// eigenvalues; it never enters the weight or the recurrence.
struct ParamSet {
    double alpha = 0.0;
    double beta = 0.0;
    double v = 1.0;
    double v2 = 0.0;
};

/// Validates the window and returns the triple. Throws ParamOutOfWindow
/// naming the failing side (lower: |alpha-beta| < |v|, upper: |v| < alpha+beta+2).
ParamSet validate_params(double alpha, double beta, double v, double v2 = 0.0);

/// Scalar eigenvalue pair of Lambda_n = diag(lambda_n, mu_n):
///   lambda_n = -n(n-1) - n(alpha+beta+4) - v - v2
///   mu_n     = -n(n-1) - n(alpha+beta+4) - v2
/// No repetition occurs among {lambda_j, mu_k} for valid parameters.
struct EigenPair {
    double lambda = 0.0;
    double mu = 0.0;
    int n = 0;
};

EigenPair eigenvalue(const ParamSet& params, int n);

/// The weight W(t) = t^alpha (1-t)^beta (W2 t^2 + W1 t + W0) on (0,1),
/// symmetric positive definite for admissible parameters.
struct WeightSpec {
    double alpha = 0.0;
    double beta = 0.0;
    Matrix2 W0;
    Matrix2 W1;
    Matrix2 W2;
};

/// Constructs the weight matrices:
///   W2 = diag( v(v+2+a+b)/(v+a-b),  v(-v+2+a+b)/(v-a+b) )
///   W1 = [[-(v+a+b+2), a+b+2], [a+b+2, -(-v+a+b+2)]]
///   W0 = (a+1) [[1,-1],[-1,1]]
/// and runs a positivity scan over an interior t-grid; a failed scan throws
/// WeightNotPositive (it indicates a formula or input defect, never a
/// tolerance issue, since the window already guarantees positivity).
WeightSpec build_weight(const ParamSet& params);

/// W(t) for t in (0,1). Throws DomainError outside the open interval.
Matrix2 weight_eval(const WeightSpec& w, double t);

/// Closed-form determinant t^(2(alpha+1)) (1-t)^(2(beta+1)) det(W2);
/// det(W2) equals v^2 (-v+a+b+2)(v+a+b+2) / ((v+a-b)(v-a+b)).
double weight_det(const WeightSpec& w, double t);

/// Scalar moment mu_k = int_0^1 t^(alpha+k) (1-t)^beta dt = B(alpha+k+1, beta+1),
/// computed by log-gamma for mu_0 and the stable ratio recursion
/// mu_{k+1} = mu_k (alpha+k+1)/(alpha+beta+k+2).
double moment(const ParamSet& params, int k);

/// Moments mu_0..mu_kmax in one pass.
std::vector<double> moment_table(const ParamSet& params, int kmax);

/// <P,Q> = int_0^1 P^T(t) W(t) Q(t) dt, expanded through the Beta moments:
///
///   sum_{i,j} P_i^T (W2 mu_{i+j+2} + W1 mu_{i+j+1} + W0 mu_{i+j}) Q_j
///
/// No quadrature error; the bilinear form is accumulated in extended
/// precision because the result can be many orders below the term sizes.
Matrix2 inner_product(const MatrixPolynomial& p, const MatrixPolynomial& q,
                      const ParamSet& params);

/// Running floating-point error bound for the inner product above:
/// gamma * sum |terms|, a rigorous Higham-style a priori bound on
/// |computed - exact| given double-precision inputs.
double inner_product_error_bound(const MatrixPolynomial& p, const MatrixPolynomial& q,
                                 const ParamSet& params);

/// The canonical operator of the family:
///   C = [[a+2-(a-b)/v, (v+a-b)/v], [(v-a+b)/v, a+2+(a-b)/v]]
///   U = (a+b+4) I
///   V = diag(v,0) + v2 I
/// Eigenvalues of C are a+1 and a+3.
HypergeometricOperator build_operator(const ParamSet& params);

} // namespace mvop
