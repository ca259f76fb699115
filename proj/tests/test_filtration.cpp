#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "valinv/error.hpp"
#include "valinv/filtration.hpp"

using namespace valinv;
using corpus::q;

namespace {

RationalPolytope simplex2(long s = 1) {
    return RationalPolytope::from_vertices(2, {{q(0), q(0)}, {q(s), q(0)}, {q(0), q(s)}});
}

RationalPolytope segment(long a, long b) { return RationalPolytope::from_vertices(1, {{q(a)}, {q(b)}}); }

RVector e(unsigned d, unsigned i) {
    RVector v(d, q(0));
    v[i] = 1;
    return v;
}

// every basis with entries in {-1, 0, 1}
Rational exhaustive_sup(const FlagFiltration& f, unsigned p) {
    const std::size_t d = f.dim();
    const std::size_t cells = d * d;
    std::size_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= 3;
    Rational best = -1;
    for (std::size_t code = 0; code < total; ++code) {
        RMatrix b(d, RVector(d));
        std::size_t c = code;
        for (std::size_t i = 0; i < cells; ++i, c /= 3) b[i / d][i % d] = q(static_cast<long>(c % 3) - 1);
        if (determinant(b) == 0) continue;
        best = std::max(best, basis_value(f, b, p));
    }
    return best;
}

}  // namespace

TEST_CASE("moments and maximal jump") {
    FlagFiltration f(1, {q(2), q(0), q(1)});
    CHECK(f.jumps() == RVector{q(0), q(1), q(2)});
    CHECK(s_m_p(f, 1) == 1);
    CHECK(s_m_p(f, 2) == q(5, 3));
    CHECK(t_m(f) == 2);
    CHECK(t_m(FlagFiltration(3, {q(0), q(0)})) == 0);
    CHECK(s_m_p_real(f, 2.0) == doctest::Approx(5.0 / 3));
    CHECK_THROWS_AS(FlagFiltration(1, {q(-1)}), Error);
    CHECK_THROWS_AS(FlagFiltration(0, {q(1)}), Error);
}

TEST_CASE("monomial filtration of the plane") {
    MonomialGradedFiltration f(simplex2(), {q(1), q(0)});
    const auto f2 = f.level(2);
    CHECK(f2.dim() == 6);
    CHECK(s_m_p(f2, 1) == q(1, 3));
    CHECK(s_m_p(f.level(2), 2) == q(1, 4));
    CHECK(t_m(f.level(3)) == 1);
    for (unsigned m = 1; m <= 6; ++m) CHECK(s_m_p(f.level(m), 1) == q(1, 3));
}

TEST_CASE("rounding to an integer filtration") {
    const auto r = round_to_integer_filtration(FlagFiltration(1, {q(1, 2), q(17, 10)}));
    CHECK(r.jumps() == RVector{q(0), q(1)});
    FlagFiltration integral(2, {q(0), q(3), q(3), q(5)});
    CHECK(round_to_integer_filtration(integral).jumps() == integral.jumps());

    // merged jump values merge flag members
    Flag fl{3, {{e(3, 1), e(3, 2)}, {e(3, 2)}}};
    FlagFiltration f(1, {q(1, 3), q(2, 3), q(3, 2)}, fl);
    const auto rf = round_to_integer_filtration(f);
    CHECK(rf.jumps() == RVector{q(0), q(0), q(1)});
    REQUIRE(rf.flag());
    CHECK(rf.flag()->members.size() == 1);
    CHECK(rf.order_of(e(3, 2)) == 1);
}

TEST_CASE("compatible bases") {
    const RMatrix b = compatible_basis(Flag{2, {{{q(1), q(1)}}}});
    REQUIRE(b.size() == 2);
    CHECK(b.back() == RVector{q(1), q(1)});
    CHECK(rank(b) == 2);

    CHECK(compatible_basis(Flag{3, {}}) == RMatrix{e(3, 0), e(3, 1), e(3, 2)});

    // full flag in Q^3
    Flag full{3, {{{q(1), q(2), q(0)}, {q(0), q(1), q(1)}}, {{q(2), q(5), q(1)}}}};
    const RMatrix fb = compatible_basis(full);
    REQUIRE(fb.size() == 3);
    CHECK(rank(fb) == 3);
    for (std::size_t k = 0; k < full.members.size(); ++k) {
        const std::size_t r = rank(full.members[k]);
        const RMatrix suffix(fb.end() - static_cast<long>(r), fb.end());
        RMatrix both = suffix;
        both.insert(both.end(), full.members[k].begin(), full.members[k].end());
        CHECK(rank(suffix) == r);
        CHECK(rank(both) == r);
    }

    CHECK_THROWS_AS(compatible_basis(Flag{2, {{e(2, 0)}, {e(2, 1)}}}), Error);
    CHECK_THROWS_AS(FlagFiltration(1, {q(0), q(1)}, Flag{2, {{e(2, 0), e(2, 1)}}}), Error);
}

TEST_CASE("orders of vanishing along a flag") {
    Flag fl{3, {{e(3, 1), e(3, 2)}, {e(3, 2)}}};
    FlagFiltration f(2, {q(0), q(1), q(4)}, fl);
    CHECK(f.order_of(e(3, 0)) == 0);
    CHECK(f.order_of({q(0), q(1), q(1)}) == 1);
    CHECK(f.order_of(e(3, 2)) == 4);
    CHECK(basis_value(f, compatible_basis(fl), 2) == s_m_p(f, 2));
    CHECK(telescoped_s_m_p(f, 3) == s_m_p(f, 3));
}

TEST_CASE("compatible basis attains the supremum over bases") {
    MonomialGradedFiltration mono(segment(0, 2), {q(1)});
    const auto f = mono.level(1, true);
    CHECK(f.jumps() == RVector{q(0), q(1), q(2)});
    for (unsigned p = 1; p <= 3; ++p) {
        CHECK(exhaustive_sup(f, p) == s_m_p(f, p));
        CHECK(sup_over_bases_oracle(f, p, 1000, 17) == s_m_p(f, p));
    }
    FlagFiltration one(1, {q(5, 2)}, Flag{1, {}});
    CHECK(sup_over_bases_oracle(one, 2, 20, 1) == q(25, 4));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto rf = corpus::random_flag_filtration(4, 2, rng);
        const unsigned p = 1 + static_cast<unsigned>(trial % 3);
        CHECK(sup_over_bases_oracle(rf, p, 200, 1000 + static_cast<unsigned>(trial)) <= s_m_p(rf, p));
        CHECK(basis_value(rf, compatible_basis(*rf.flag()), p) == s_m_p(rf, p));
        CHECK(telescoped_s_m_p(rf, p) == s_m_p(rf, p));
    }
}

TEST_CASE("rounding sandwich") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = corpus::random_flag_filtration(1 + static_cast<std::size_t>(trial % 5), 1 + trial % 4, rng);
        for (double p : {1.0, 1.5, 1.25, 2.0, 2.5, 3.0}) {
            const auto check = rounding_sandwich(f, p);
            CHECK(check.upper);
            CHECK(check.lower);
            CHECK(check.certified);
        }
    }
    // integer jumps: the upper side is an equality, decided termwise for real p
    const auto integral = corpus::random_flag_filtration(4, 3, rng, true);
    const auto check = rounding_sandwich(integral, 1.5);
    CHECK(check.upper);
    CHECK(check.lower);
    CHECK(check.certified);
}

TEST_CASE("generated filtrations") {
    MonomialGradedFiltration line(segment(0, 2), {q(1)});
    const auto low = generated_filtration(line, 3, 2);
    for (const auto& w : low.weights) CHECK(w == 0);
    const auto same = generated_filtration(line, 3, 3);
    for (std::size_t i = 0; i < same.points.size(); ++i) CHECK(same.weights[i] == line.weight(3, same.points[i]));
    const auto twice = generated_filtration(line, 3, 6);
    for (std::size_t i = 0; i < twice.points.size(); ++i) {
        CHECK(twice.decomposed[i]);
        CHECK(twice.weights[i] == line.weight(6, twice.points[i]));
    }

    MonomialGradedFiltration plane(simplex2(), {q(1, 2), q(1, 3)});
    for (unsigned m = 1; m <= 3; ++m) {
        for (unsigned k = 1; k <= 7; ++k) {
            const auto g = generated_filtration(plane, m, k);
            for (std::size_t i = 0; i < g.points.size(); ++i) CHECK(g.weights[i] <= plane.weight(k, g.points[i]));
        }
    }

    // rounding at level m loses less as m grows along a divisibility chain
    MonomialGradedFiltration third(segment(0, 2), {q(1, 3)});
    const unsigned k = 12;
    const Rational target = s_m_p(third.level(k), 1);
    for (const auto& chain : {std::vector<unsigned>{1, 2, 4, 12}, std::vector<unsigned>{1, 3, 6, 12}}) {
        for (unsigned p : {1u, 2u}) {
            Rational prev = -1;
            for (unsigned m : chain) {
                const Rational s = s_m_p(generated_filtration(third, m, k).filtration(), p);
                CHECK(s >= prev);
                CHECK(s <= s_m_p(third.level(k), p));
                prev = s;
            }
            CHECK(prev == s_m_p(round_to_integer_filtration(third.level(k)), p));
        }
    }
    CHECK(target == q(1, 3));
    CHECK_THROWS_AS(generated_filtration(third, 1, 21), Error);
}
