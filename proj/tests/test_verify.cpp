#include <doctest.h>

#include <cmath>
#include <random>

#include "mvop/verify.hpp"
#include "mvop/mop.hpp"
#include "mvop/errors.hpp"
#include "support/approx.hpp"
#include "support/grids.hpp"

using namespace mvop;
using mvop::testing::close;

TEST_CASE("symmetry identities hold across the grid") {
    const auto grid = mvop::testing::valid_grid();
    CHECK(grid.size() >= 50);
    for (const ParamSet& ps : grid) {
        const SymmetryReport rep = check_symmetry(ps);
        CHECK(rep.pass);
        CHECK(rep.residual_eq1 <= 1e-12);
        CHECK(rep.residual_eq2 <= 1e-12);
        CHECK(rep.residual_skew <= 1e-12);
    }
}

TEST_CASE("a perturbed weight is detected") {
    const ParamSet ps = validate_params(0.0, 0.0, 1.0);
    WeightSpec w = build_weight(ps);
    w.W1.m12 += 1e-3;
    const SymmetryReport rep = check_symmetry(w, build_operator(ps));
    CHECK_FALSE(rep.pass);
    CHECK(rep.residual_eq1 >= 1e-4);
}

TEST_CASE("commutant is scalar-only for the family") {
    for (const ParamSet& ps : mvop::testing::small_grid()) {
        const CommutantReport rep = commutant(ps, 5);
        CHECK(rep.dimension == 1);
        // The only basis element is a scalar matrix.
        const Matrix2 b = rep.basis.at(0);
        CHECK(std::abs(b.m12) <= 1e-9);
        CHECK(std::abs(b.m21) <= 1e-9);
        CHECK(close(b.m11, b.m22, 1e-9));
        // More constraints can only shrink the null space.
        CHECK(commutant(ps, 10).dimension == 1);
        CHECK(commutant(ps, 20).dimension == 1);
    }
}

TEST_CASE("all-diagonal fixtures have a fat commutant") {
    const std::vector<Matrix2> diag_fixture = {
        Matrix2::diagonal(1.0, 2.0), Matrix2::diagonal(0.3, -0.7), Matrix2::diagonal(5.0, 5.0)};
    const CommutantReport rep = commutant_of(diag_fixture);
    CHECK(rep.dimension >= 2);
    // A scalar-only set commutes with everything.
    CHECK(commutant_of({Matrix2::identity(), 3.0 * Matrix2::identity()}).dimension == 4);
}

TEST_CASE("conjugation is a right group action") {
    const HypergeometricOperator op = build_operator(validate_params(0.5, -0.25, 1.1));
    CHECK(close(conjugate(op, Matrix2::identity()).C, op.C, 1e-14));
    CHECK(close(conjugate(op, 2.5 * Matrix2::identity()).C, op.C, 1e-14));

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        Matrix2 m{u(rng), u(rng), u(rng), u(rng)};
        Matrix2 m2{u(rng), u(rng), u(rng), u(rng)};
        if (std::abs(m.det()) < 0.1 || std::abs(m2.det()) < 0.1) continue;
        const HypergeometricOperator lhs = conjugate(conjugate(op, m), m2);
        const HypergeometricOperator rhs = conjugate(op, m * m2);
        CHECK(close(lhs.C, rhs.C, 1e-10));
        CHECK(close(lhs.U, rhs.U, 1e-10));
        CHECK(close(lhs.V, rhs.V, 1e-10));
    }
    CHECK_THROWS_AS(conjugate(op, Matrix2{1, 2, 2, 4}), SingularMatrix);
}

TEST_CASE("canonicalizing conjugation of the four-parameter form") {
    // Sampled (c11, c22, c21, v): the pencil with
    //   c12 = -(c11-c22-2)(c11-c22+2)/(4 c21),  u = c11+c22+v(c11-c22)/2
    // conjugated by M = diag((c11-c22+2)/(2 c21), 1) must land on the
    // canonical operator with alpha = (c11+c22)/2 - 2 and
    // beta = v(c11-c22)/2 + (c11+c22)/2 - 2.
    struct Sample {
        double c11, c22, c21, v;
    };
    for (const Sample& s : {Sample{4.1, 3.3, 0.8, 0.9}, Sample{5.0, 4.0, -1.2, -0.7},
                            Sample{3.6, 4.4, 2.0, 1.3}}) {
        const double c12 = -(s.c11 - s.c22 - 2.0) * (s.c11 - s.c22 + 2.0) / (4.0 * s.c21);
        const double uu = s.c11 + s.c22 + 0.5 * s.v * (s.c11 - s.c22);
        const HypergeometricOperator four{{Matrix2{s.c11, c12, s.c21, s.c22}},
                                          uu * Matrix2::identity(),
                                          Matrix2::diagonal(s.v, 0.0)};
        const Matrix2 m = Matrix2::diagonal((s.c11 - s.c22 + 2.0) / (2.0 * s.c21), 1.0);
        const HypergeometricOperator got = conjugate(four, m);

        const double alpha = 0.5 * (s.c11 + s.c22) - 2.0;
        const double beta = 0.5 * s.v * (s.c11 - s.c22) + 0.5 * (s.c11 + s.c22) - 2.0;
        const HypergeometricOperator want = build_operator(validate_params(alpha, beta, s.v));
        CHECK(close(got.C, want.C, 1e-12));
        CHECK(close(got.U, want.U, 1e-12));
        CHECK(close(got.V, want.V, 1e-12));
    }
}

TEST_CASE("equivalence returns a conjugator exactly for equal parameters") {
    const HypergeometricOperator op = build_operator(validate_params(0.0, 0.0, 1.0));
    const auto self = equivalence_params(op, op);
    REQUIRE(self.has_value());
    CHECK(close(*self, Matrix2::identity(), 1e-12));

    // Distinct v: no intertwiner.
    const HypergeometricOperator op2 = build_operator(validate_params(0.0, 0.0, 1.01));
    CHECK_FALSE(equivalence_params(op, op2).has_value());

    // Distinct alpha or beta at equal v: no intertwiner.
    const HypergeometricOperator op3 = build_operator(validate_params(0.5, 0.0, 1.2));
    const HypergeometricOperator op4 = build_operator(validate_params(0.0, 0.5, 1.2));
    CHECK_FALSE(equivalence_params(op3, op4).has_value());

    // Symmetric: both directions agree.
    CHECK(equivalence_params(op2, op).has_value() == equivalence_params(op, op2).has_value());
}

TEST_CASE("equivalence recovers a diagonal conjugator after re-canonicalization") {
    // Conjugating by diag(2,1) scales the off-diagonal entries of C; the
    // canonicalizing conjugation of the resulting four-parameter form brings
    // it back, and the recovered intertwiner is diagonal.
    const ParamSet ps = validate_params(0.5, -0.25, 1.1);
    const HypergeometricOperator op = build_operator(ps);
    const Matrix2 d = Matrix2::diagonal(2.0, 1.0);
    const HypergeometricOperator twisted = conjugate(op, d);

    const double c11 = twisted.C.m11, c22 = twisted.C.m22, c21 = twisted.C.m21;
    const Matrix2 m = Matrix2::diagonal((c11 - c22 + 2.0) / (2.0 * c21), 1.0);
    const HypergeometricOperator recanon = conjugate(twisted, m);

    const auto conj = equivalence_params(op, recanon);
    REQUIRE(conj.has_value());
    CHECK(std::abs(conj->m12) <= 1e-10);
    CHECK(std::abs(conj->m21) <= 1e-10);
    // Full round trip: op conjugated by (d m) equals recanon.
    const HypergeometricOperator round = conjugate(op, d * m);
    CHECK(close(round.C, recanon.C, 1e-12));
}

TEST_CASE("gegenbauer parameter map") {
    const ParamSet ps = gegenbauer_params(1.0, 3.0);
    CHECK(ps.alpha == 0.5);
    CHECK(ps.beta == 0.5);
    CHECK(ps.v == -1.0);
    CHECK(ps.v2 == 2.0);

    CHECK_THROWS_AS(gegenbauer_params(1.0, 2.0), ParamOutOfWindow);  // v = 0
    CHECK_THROWS_AS(gegenbauer_params(0.0, 3.0), ParamOutOfWindow);
    CHECK_THROWS_AS(gegenbauer_params(3.0, 2.0), ParamOutOfWindow);

    // Window holds across 0 < p < q, p != q/2.
    for (double q : {2.5, 3.0, 4.0, 5.5, 7.0}) {
        for (double frac : {0.1, 0.35, 0.65, 0.9}) {
            const double p = frac * q;
            if (std::abs(p - q / 2.0) < 1e-9) continue;
            CHECK_NOTHROW(gegenbauer_params(p, q));
        }
    }
}

TEST_CASE("gegenbauer weight identity on a grid") {
    for (const auto& [p, q] : {std::pair{1.0, 3.0}, std::pair{2.0, 5.0}, std::pair{1.5, 4.0}}) {
        double fitted = 0.0;
        const double res = gegenbauer_weight_residual(p, q, 1000, &fitted);
        CHECK(res <= 1e-10);
        CHECK(close(fitted, 1.0, 1e-10));
    }
}

TEST_CASE("gegenbauer weight value at x = 0") {
    // x = 0 is t = 1/2: the sphere-side weight equals diag(q-p, p) there.
    const double p = 1.5, q = 4.0;
    const ParamSet ps = gegenbauer_params(p, q);
    const WeightSpec w = build_weight(ps);
    const Matrix2 lhs = std::pow(2.0, q - 1.0) * weight_eval(w, 0.5);
    CHECK(close(lhs, Matrix2::diagonal(q - p, p), 1e-12));
}

TEST_CASE("gegenbauer eigenvalue ladders coincide") {
    for (const auto& [p, q] : {std::pair{1.0, 3.0}, std::pair{2.0, 5.0}, std::pair{1.5, 4.0},
                               std::pair{0.75, 2.5}}) {
        const ParamSet ps = gegenbauer_params(p, q);
        for (int n = 0; n <= 20; ++n) {
            const EigenPair e = eigenvalue(ps, n);
            const double want_lambda = -static_cast<double>(n) * (n + q + 1.0) - p;
            const double want_mu = -static_cast<double>(n) * (n + q + 1.0) - (q - p);
            CHECK(std::abs(e.lambda - want_lambda) <= 1e-12 * std::max(1.0, std::abs(want_lambda)));
            CHECK(std::abs(e.mu - want_mu) <= 1e-12 * std::max(1.0, std::abs(want_mu)));
        }
    }
}
