#pragma once

#include <optional>
#include <vector>

#include "mvop/family.hpp"

namespace mvop {

/// Residuals of the symmetry equations checked as polynomial identities on
/// the parts left after factoring out t^alpha (1-t)^beta:
///
///   eq1:  2 (t(1-t) W)' = W (C-tU) + (C-tU)^T W
///   eq2:  (W (C-tU) - (C-tU)^T W)' = 2 (V^T W - W V)
///
/// plus the closed skew form W(C-tU) - (C-tU)^T W = -2v t^(a+1) (1-t)^(b+1) J
/// with J = [[0,1],[-1,0]], and the boundary decay of t(1-t)W(t) and of the
/// skew part near t = 0 and t = 1. Residuals are max coefficient entries
/// relative to the weight's polynomial part.
struct SymmetryReport {
    double residual_eq1 = 0.0;
    double residual_eq2 = 0.0;
    double residual_skew = 0.0;
    double boundary_0 = 0.0;
    double boundary_1 = 0.0;
    // Decay-rate bounds the sampled boundary norms are held against.
    double boundary_bound_0 = 0.0;
    double boundary_bound_1 = 0.0;
    bool pass = false;
};

SymmetryReport check_symmetry(const ParamSet& params, double tol = 1e-12);

/// Same check for an explicit (weight, operator) pair of the family shape;
/// lets tests feed perturbed weights to confirm detector sensitivity.
SymmetryReport check_symmetry(const WeightSpec& w, const HypergeometricOperator& op,
                              double tol = 1e-12);

/// Dimension and basis of the joint commutant {X : XM = MX for all M} of a
/// matrix set, computed as the null space of the stacked commutator system
/// over the 4-dimensional space of 2x2 matrices. Singular values below
/// sv_tol * sigma_max count as zero. Dimension 1 means only scalars commute,
/// i.e. the weight is irreducible.
struct CommutantReport {
    int dimension = 0;
    std::vector<Matrix2> basis;
    int depth = 0;
};

/// Commutant of {A_n, B_n : n <= N} for the family's recurrence coefficients.
CommutantReport commutant(const ParamSet& params, int N, double sv_tol = 1e-10);

/// Commutant of an arbitrary matrix list (negative-control fixtures).
CommutantReport commutant_of(const std::vector<Matrix2>& mats, double sv_tol = 1e-10);

/// (M^{-1} C M, M^{-1} U M, M^{-1} V M); a group action:
/// conjugate(conjugate(op, M), M') = conjugate(op, M M').
HypergeometricOperator conjugate(const HypergeometricOperator& op, const Matrix2& m);

/// Searches for a constant nonsingular M with op1 M = M op2 coefficient-wise,
/// following the rigidity argument: the V-intertwining forces M diagonal
/// (or antidiagonal when the V spectra are swapped), then the C-intertwining
/// fixes M up to a scalar. Returns the conjugator, or nullopt when the
/// operators are inequivalent. For canonical family operators with v2 = 0
/// this is non-null exactly when the parameters coincide.
std::optional<Matrix2> equivalence_params(const HypergeometricOperator& op1,
                                          const HypergeometricOperator& op2,
                                          double tol = 1e-10);

/// Parameter map of the Gegenbauer weight on the q-sphere:
/// alpha = beta = q/2 - 1, v = 2p - q, v2 = q - p. Requires 0 < p < q and
/// p != q/2 (else v = 0 falls on the window boundary).
ParamSet gegenbauer_params(double p, double q);

/// Max relative entry deviation, over a t-grid, between
///   (1-x^2)^(q/2-1) [[p x^2 + q - p, -q x], [-q x, (q-p) x^2 + p]]
/// at x = 1 - 2t and 2^(q-1) W_{alpha,beta,v}(t) under the parameter map,
/// after fitting at most one global scalar factor. The fitted factor (written
/// to fitted_scale when non-null) comes out as 1 for a correct map; a value
/// away from 1 localizes any constant-congruence discrepancy.
double gegenbauer_weight_residual(double p, double q, int grid_points = 1000,
                                  double* fitted_scale = nullptr);

} // namespace mvop
