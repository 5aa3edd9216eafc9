#pragma once

#include <utility>
#include <vector>

#include "mvop/family.hpp"

namespace mvop {

/// Coefficients of the three-term recurrence
///
///     t P_n = P_{n+1} + P_n B_n + P_{n-1} A_n,   P_{-1} = 0, A_0 = I.
///
/// For admissible parameters A_n (n >= 1) is diagonal with positive entries
/// and S_n B_n is symmetric, with S_n the squared norms.
struct RecurrencePair {
    Matrix2 A;
    Matrix2 B;
    int n = 0;
};

/// Monic P_n built by the downward coefficient recursion: column c of the
/// coefficient of t^k solves
///
///     F_k = (a - Lambda_k)^{-1} (k+1)(k + C) F_{k+1},   F_n = e_c,
///
/// with a = lambda_n for the first column and a = mu_n for the second. Only
/// diagonal matrices are inverted; the divisors are bounded away from zero by
/// eigenvalue no-repetition. A divisor below 1e-12 throws EigenvalueCollision.
MatrixPolynomial monic_polynomial(const ParamSet& params, int n);

/// The two subleading coefficients (P_n^{n-1}, P_n^{n-2}) by direct evaluation
/// of their closed forms in the entries of C and the eigenvalue ladder.
/// Requires n >= 1; the second member is the zero matrix when n < 2.
std::pair<Matrix2, Matrix2> subleading_coeffs(const ParamSet& params, int n);

/// Recurrence coefficients extracted from the polynomials themselves:
///   B_n = P_n^{n-1} - P_{n+1}^n
///   A_n = P_n^{n-2} - P_{n+1}^{n-1} - P_n^{n-1} (P_n^{n-1} - P_{n+1}^n)
/// with missing coefficients taken as zero and A_0 = I by convention.
RecurrencePair recurrence_from_poly(const ParamSet& params, int n);

/// Recurrence coefficients from their closed forms; independent of v2.
/// A_0 = I by convention (the closed-form prefactor is 0/0 at n = 0 when
/// alpha + beta = -1, so the formula is never evaluated there).
RecurrencePair recurrence_closed(const ParamSet& params, int n);

/// Squared norms S_0..S_N: S_0 = <I, I>, S_{n+1} = S_n A_{n+1} using the
/// closed-form recurrence. Throws NormNotPositive if any diagonal entry is
/// <= 0. With crosscheck set, S_n is verified against <P_n, P_n> for small n
/// (strict relative tolerance) and against the floating error bound beyond.
using NormSequence = std::vector<Matrix2>;
NormSequence norms(const ParamSet& params, int N, bool crosscheck = false);

} // namespace mvop
