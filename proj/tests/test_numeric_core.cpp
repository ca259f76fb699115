#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "valinv/certified.hpp"
#include "valinv/error.hpp"
#include "valinv/linalg.hpp"
#include "valinv/quadrature.hpp"
#include "valinv/special.hpp"

#include <cmath>
#include <random>

using namespace valinv;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

PiecewisePolynomial single(Polynomial p, Rational a, Rational b) {
    return PiecewisePolynomial({a, b}, {std::move(p)}, true);
}

// (3 - x)^2 on [0, 3]
PiecewisePolynomial p2_curve() { return single(Polynomial{q(9), q(-6), q(1)}, q(0), q(3)); }

// Independent Beta-integral oracle: ∫_0^c x^a (c - x)^b dx = c^{a+b+1} a! b! / (a+b+1)!
Rational beta_integral(unsigned a, unsigned b, const Rational& c) {
    Integer fa(1), fb(1), fab(1);
    for (unsigned k = 2; k <= a; ++k) fa *= k;
    for (unsigned k = 2; k <= b; ++k) fb *= k;
    for (unsigned k = 2; k <= a + b + 1; ++k) fab *= k;
    return pow(c, a + b + 1) * Rational(fa * fb, fab);
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/6") == q(1, 2));
    CHECK(parse_rational("-4") == q(-4));
    CHECK(parse_rational("0.25") == q(1, 4));
    CHECK(parse_rational("-1.5") == q(-3, 2));
    CHECK(to_string(q(6, 4)) == "3/2");
    CHECK(to_string(q(-8, 4)) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK(floor(q(-1, 2)) == -1);
    CHECK(ceil(q(-1, 2)) == 0);
    CHECK(floor(q(7, 2)) == 3);
}

TEST_CASE("integrate_monomial_weighted examples") {
    auto line = single(Polynomial{q(1), q(-1)}, q(0), q(1));
    CHECK(integrate_monomial_weighted(line, 1, q(0), q(1)) == q(1, 2));

    auto c = p2_curve();
    CHECK(integrate_monomial_weighted(c, 1, q(0), q(3)) == q(9));
    // ∫_0^3 x (3-x)^2 dx; p times this is V·S^(2) = 27/2
    CHECK(integrate_monomial_weighted(c, 2, q(0), q(3)) == q(27, 4));
    CHECK(2 * integrate_monomial_weighted(c, 2, q(0), q(3)) == q(27, 2));

    for (unsigned p = 1; p <= 6; ++p) CHECK(integrate_monomial_weighted(c, p, q(0), q(3)) == beta_integral(p - 1, 2, q(3)));

    CHECK_THROWS_AS(integrate_monomial_weighted(c, 1, q(-1), q(2)), Error);
    CHECK_THROWS_AS(integrate_monomial_weighted(c, 1, q(2), q(1)), Error);
    try {
        integrate_monomial_weighted(c, 1, q(0), q(4));
        FAIL("expected range error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::range);
    }
}

TEST_CASE("integrate_monomial_weighted is additive and linear") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 25; ++trial) {
        RVector bp{q(0), q(1, 3), q(1), q(5, 2)};
        std::vector<Polynomial> f_pieces, g_pieces;
        for (int i = 0; i < 3; ++i) {
            f_pieces.push_back(Polynomial{q(coef(rng)), q(coef(rng)), q(coef(rng), 7)});
            g_pieces.push_back(Polynomial{q(coef(rng), 3), q(coef(rng)), q(0), q(coef(rng))});
        }
        PiecewisePolynomial f(bp, f_pieces), g(bp, g_pieces);
        std::vector<Polynomial> sum_pieces;
        const Rational alpha = q(coef(rng), 5), beta = q(coef(rng), 2);
        for (int i = 0; i < 3; ++i) sum_pieces.push_back(f_pieces[i] * alpha + g_pieces[i] * beta);
        PiecewisePolynomial h(bp, sum_pieces);
        for (unsigned p = 1; p <= 4; ++p) {
            const Rational mid = q(coef(rng) + 10, 9);  // inside [1/9, 19/9]
            const Rational whole = integrate_monomial_weighted(f, p, q(0), q(5, 2));
            CHECK(whole == integrate_monomial_weighted(f, p, q(0), mid) + integrate_monomial_weighted(f, p, mid, q(5, 2)));
            CHECK(integrate_monomial_weighted(h, p, q(0), q(5, 2)) ==
                  alpha * whole + beta * integrate_monomial_weighted(g, p, q(0), q(5, 2)));
        }
    }
}

TEST_CASE("integrate_real_power examples") {
    auto line = single(Polynomial{q(1), q(-1)}, q(0), q(1));
    CHECK(std::abs(integrate_real_power(line, 1.0, q(0), q(1), 1e-12) - 0.5) <= 1e-12);
    CHECK(std::abs(integrate_real_power(line, 2.5, q(0), q(1), 1e-12) - 4.0 / 35.0) <= 1e-12);
    auto zero = single(Polynomial{}, q(0), q(1));
    CHECK(integrate_real_power(zero, 3.7, q(0), q(1), 1e-12) == 0.0);
    CHECK_THROWS_AS(integrate_real_power(line, 0.5, q(0), q(1), 1e-12), Error);
    CHECK_THROWS_AS(integrate_real_power(line, 2.0, q(0), q(1), 0.0), Error);

    auto c = p2_curve();
    for (unsigned p = 1; p <= 6; ++p) {
        const double exact = to_double(integrate_monomial_weighted(c, p, q(0), q(3)));
        CHECK(std::abs(integrate_real_power(c, p, q(0), q(3), 1e-10) - exact) <= 1e-10);
    }
}

TEST_CASE("adaptive quadrature reports non-convergence") {
    auto rough = [](double x) { return x == 0.0 ? 0.0 : std::sin(1.0 / x) / std::sqrt(x); };
    try {
        adaptive_gauss_kronrod(rough, 0.0, 1.0, 1e-14, 3000);
        FAIL("expected accuracy error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::accuracy);
    }
}

TEST_CASE("log_gamma") {
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    CHECK(log_gamma(1.0) == 0.0);
    CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-13));
    CHECK(log_gamma(171.5) == doctest::Approx(std::lgamma(171.5)).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), Error);
    CHECK_THROWS_AS(log_gamma(-2.0), Error);

    // Γ(x+1) = x Γ(x)
    for (double x = 0.5; x <= 50.0; x += 0.37) {
        const double lhs = std::exp(log_gamma(x + 1.0));
        const double rhs = x * std::exp(log_gamma(x));
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
    }
    CHECK(beta_constant_real(2.0, 2.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
}

TEST_CASE("exact linear algebra") {
    RMatrix m{{q(2), q(1)}, {q(4), q(2)}};
    CHECK(rank(m) == 1);
    CHECK(determinant(m) == 0);
    CHECK(determinant({{q(1), q(2)}, {q(3), q(4)}}) == -2);
    auto x = solve({{q(1), q(1)}, {q(1), q(-1)}}, {q(3), q(1)});
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    CHECK_FALSE(solve({{q(1), q(1)}, {q(1), q(1)}}, {q(1), q(2)}));
    auto ns = nullspace({{q(1), q(1), q(0)}}, 3);
    CHECK(ns.size() == 2);
    CHECK(in_row_span({q(2), q(2), q(0)}, {{q(1), q(1), q(0)}}));
}

TEST_CASE("lagrange interpolation recovers polynomials") {
    Polynomial p{q(1), q(-2, 3), q(0), q(5)};
    std::vector<std::pair<Rational, Rational>> pts;
    for (int i = 0; i < 4; ++i) pts.emplace_back(q(i, 2), p(q(i, 2)));
    CHECK(lagrange_interpolate(pts) == p);
}

TEST_CASE("certified enclosures") {
    Enclosure a = Enclosure::power(q(2), 0.5);
    CHECK(a.lower() <= std::sqrt(2.0));
    CHECK(a.upper() >= std::sqrt(2.0));
    CHECK(a.width() < 1e-60);
    Enclosure b(q(7, 5));
    CHECK(certainly_ge(a, b));
    CHECK_FALSE(certainly_ge(b, a));
    Enclosure zero = Enclosure::power(q(0), 1.5);
    CHECK(certainly_ge(zero, Enclosure(q(0))));
    CHECK(certainly_ge(Enclosure(q(0)), zero));
}
