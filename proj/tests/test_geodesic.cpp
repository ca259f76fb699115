#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "valinv/error.hpp"
#include "valinv/geodesic.hpp"

#include <cmath>

using namespace valinv;
using corpus::q;

TEST_CASE("test curves") {
    const TestCurve1D tc({q(0), q(1), q(2), q(3)}, {q(0), q(-1), q(-2), q(-4)});
    CHECK(tc.lambdas() == RVector{q(0), q(2), q(3)});
    CHECK(tc.slopes() == RVector{q(-1), q(-2)});
    CHECK(tc(q(5, 2)) == -3);
    CHECK_THROWS_AS(TestCurve1D({q(0), q(1), q(2)}, {q(0), q(-2), q(-3)}), InvariantViolation);
    CHECK_THROWS_AS(TestCurve1D({q(0), q(1)}, {q(0), q(1)}), InvariantViolation);
    CHECK_THROWS_AS(TestCurve1D({q(1)}, {q(0)}), InvariantViolation);
    CHECK_THROWS_AS(tc(q(4)), Error);
}

TEST_CASE("legendre transform examples") {
    const auto c = legendre(TestCurve1D::shifted_trivial(q(3)));
    CHECK(c.breaks().empty());
    CHECK(c.slopes() == RVector{q(3)});
    CHECK(c(q(5)) == 15);
    CHECK(inverse_legendre(c, q(3)) == TestCurve1D::shifted_trivial(q(3)));

    const auto trivial = legendre(TestCurve1D::shifted_trivial(q(0)));
    CHECK(trivial.slopes() == RVector{q(0)});
    CHECK(trivial(q(7)) == 0);
    CHECK(inverse_legendre(trivial, q(0)).lambda_max() == 0);

    // PL approximation of -λ²: φ slopes are the breakpoints, kinks at -ψ'
    const TestCurve1D parab({q(0), q(1), q(2), q(3)}, {q(0), q(-1), q(-4), q(-9)});
    const auto phi = legendre(parab);
    CHECK(phi.breaks() == RVector{q(1), q(3), q(5)});
    CHECK(phi.slopes() == RVector{q(0), q(1), q(2), q(3)});
    for (long t = 0; t <= 8; ++t) {
        Rational best = parab.values()[0];
        for (std::size_t i = 0; i < parab.lambdas().size(); ++i)
            best = std::max(best, parab.values()[i] + q(t) * parab.lambdas()[i]);
        CHECK(phi(q(t)) == best);
    }
    CHECK(growth_bound_holds(phi, q(3)));
    CHECK_FALSE(growth_bound_holds(phi, q(2)));

    // capping the domain restricts ψ
    const auto capped = inverse_legendre(phi, q(3, 2));
    CHECK(capped.lambda_max() == q(3, 2));
    CHECK(capped(q(3, 2)) == parab(q(3, 2)));
}

TEST_CASE("legendre round trip on random curves") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 50; ++trial) {
        const auto tc = corpus::random_test_curve(rng);
        const auto phi = legendre(tc);
        CHECK(inverse_legendre(phi, tc.lambda_max()) == tc);
        CHECK(legendre(inverse_legendre(phi, tc.lambda_max())) == phi);
        CHECK(growth_bound_holds(phi, tc.lambda_max()));
        for (long t = 0; t <= 12; ++t) {
            const Rational tt = q(t, 2);
            Rational best = 0;
            for (std::size_t i = 0; i < tc.lambdas().size(); ++i)
                best = std::max(best, tc.values()[i] + tt * tc.lambdas()[i]);
            CHECK(phi(tt) == best);
        }
    }
}

TEST_CASE("speeds from measures and transforms") {
    const auto simplex = RationalPolytope::from_vertices(2, {{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}});
    ConcaveTransform ct(simplex, {{{q(1), q(0)}, q(0)}});
    CHECK(dp_speed(ct, 1.0) == doctest::Approx(1.0 / 3));
    CHECK(dp_speed(ct, 2.0) == doctest::Approx(std::sqrt(1.0 / 6)));
    CHECK(dp_speed(ct, 1.5) == doctest::Approx(std::pow(s_p_real(volume_curve_of(ct), 1.5), 1 / 1.5)));
    SpectralMeasure dirac({{q(5, 2), q(1)}});
    for (double p : {1.0, 2.0, 3.5}) CHECK(dp_speed(dirac, p) == doctest::Approx(2.5));

    double prev = 0;
    for (double p = 1; p <= 30; p += 1) {
        const double s = dp_speed(ct, p);
        CHECK(s >= prev);
        prev = s;
    }
    CHECK(dp_speed(ct, 400.0) == doctest::Approx(1.0).epsilon(0.02));

    // the shifted trivial ray breaks the normalized monotonicity; reported only
    const auto profile = normalized_speed_profile(dirac, 2, {1, 2, 3});
    CHECK(profile[1] < profile[0]);
}

TEST_CASE("moment identity on toric models") {
    const auto p2 = ToricModel::builtin("p2");
    const auto e1 = make_valuation(p2, {q(1), q(0)});
    const auto r1 = verify_moment_identity(p2, e1, 1.0, 16);
    REQUIRE(r1.rows.size() == 5);
    for (const auto& row : r1.rows) CHECK(row.gap < 1e-12);
    CHECK(r1.rows[0].continuous == doctest::Approx(1.0 / 3));
    CHECK(r1.converging);
    CHECK(r1.normalized_nondecreasing);

    const auto r2 = verify_moment_identity(p2, e1, 2.0, 16);
    CHECK(r2.rows[1].m == 2);
    CHECK(r2.rows[1].quantized == doctest::Approx(0.5));
    CHECK(r2.rows[1].gap == doctest::Approx(0.5 - std::sqrt(1.0 / 6)).epsilon(1e-12));
    CHECK(r2.converging);

    const auto jm = jumping_measure(section_filtration(p2, e1, 2));
    CHECK(jm.moment(2) == q(1, 4));

    for (const char* name : {"p1xp1", "hirzebruch-1", "p2-anticanonical"}) {
        const auto tm = ToricModel::builtin(name);
        for (const auto& c : candidate_table(tm, 1)) {
            const auto r = verify_moment_identity(tm, c.valuation, 2.0, 8);
            CHECK(r.converging);
            CHECK(r.normalized_nondecreasing);
        }
    }
}
