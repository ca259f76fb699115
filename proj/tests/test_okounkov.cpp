#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "valinv/error.hpp"
#include "valinv/okounkov.hpp"

using namespace valinv;
using corpus::q;

namespace {

RationalPolytope unit_simplex(unsigned n, const Rational& scale = 1) {
    std::vector<RVector> pts{RVector(n, q(0))};
    for (unsigned k = 0; k < n; ++k) {
        RVector e(n, q(0));
        e[k] = scale;
        pts.push_back(e);
    }
    return RationalPolytope::from_vertices(n, pts);
}

RationalPolytope unit_cube(unsigned n) {
    std::vector<RVector> pts;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        RVector x;
        for (unsigned k = 0; k < n; ++k) x.push_back(q((mask >> k) & 1));
        pts.push_back(x);
    }
    return RationalPolytope::from_vertices(n, pts);
}

}  // namespace

TEST_CASE("polytope volumes") {
    CHECK(unit_cube(2).volume() == 1);
    CHECK(unit_cube(3).volume() == 1);
    CHECK(unit_simplex(2).volume() == q(1, 2));
    CHECK(unit_simplex(2, q(3)).volume() == q(9, 2));
    CHECK(unit_simplex(3).volume() == q(1, 6));
    auto cross = RationalPolytope::from_vertices(
        3, {{q(1), q(0), q(0)}, {q(-1), q(0), q(0)}, {q(0), q(1), q(0)},
            {q(0), q(-1), q(0)}, {q(0), q(0), q(1)}, {q(0), q(0), q(-1)}});
    CHECK(cross.volume() == q(4, 3));
    CHECK(cross.facets().size() == 8);
    CHECK(unit_cube(3).facets().size() == 6);
    CHECK(unit_simplex(2, q(3)).lattice_points().size() == 10);
    CHECK(unit_simplex(2, q(3)).is_lattice());
    CHECK_FALSE(unit_simplex(2, q(1, 2)).is_lattice());
}

TEST_CASE("volume agrees with a Cavalieri oracle") {
    std::mt19937_64 rng(7);
    for (unsigned n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 15; ++trial) {
            const auto p = corpus::random_polytope(n, rng);
            CHECK(p.volume() == corpus::cavalieri_volume(n, p.facets()));
            Rational sum = 0;
            for (const auto& s : p.triangulate()) sum += simplex_volume(s);
            CHECK(sum == p.volume());
        }
    }
}

TEST_CASE("halfspace and vertex descriptions round trip") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = corpus::random_polytope(3, rng);
        const auto back = RationalPolytope::from_halfspaces(3, p.facets());
        CHECK(back.vertices() == p.vertices());
    }
}

TEST_CASE("simplex power integral matches divided differences") {
    std::mt19937_64 rng(3);
    for (unsigned n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            Simplex s;
            for (;;) {
                s.clear();
                for (unsigned i = 0; i <= n; ++i) {
                    RVector v;
                    for (unsigned k = 0; k < n; ++k) v.push_back(q(corpus::uniform(rng, -4, 4)));
                    s.push_back(v);
                }
                if (simplex_volume(s) != 0) break;
            }
            // a repeated value exercises the confluent case
            AffineForm form{corpus::random_direction(n, rng), q(corpus::uniform(rng, 0, 3))};
            if (trial % 3 == 0) form.linear.assign(n, q(0));
            RVector values;
            for (const auto& v : s) values.push_back(form(v));
            for (unsigned p = 0; p <= 5; ++p) {
                const Rational expected =
                    abs(simplex_volume(s)) * Rational(factorial(n) * factorial(p), factorial(p + n)) *
                    corpus::divided_difference_power(values, p + n);
                CHECK(simplex_power_integral(s, form, p) == expected);
            }
        }
    }
}

TEST_CASE("moments of a linear transform on the simplex") {
    ConcaveTransform ct(unit_simplex(2), {{{q(1), q(0)}, q(0)}});
    CHECK(ct.max_value() == 1);
    CHECK(moment_p(ct, 1) == q(1, 3));
    CHECK(moment_p(ct, 2) == q(1, 6));
    CHECK(slice_volume(ct, q(0)) == q(1, 2));
    CHECK(slice_volume(ct, q(1, 2)) == q(1, 8));
    CHECK(slice_volume(ct, q(2)) == 0);
    const auto c = volume_curve_of(ct);
    CHECK(c.volume() == 1);
    CHECK(c.tau() == 1);
    CHECK(s_p(c, 2) == q(1, 6));

    ConcaveTransform zero(unit_simplex(2), {{{q(0), q(0)}, q(0)}});
    CHECK(moment_p(zero, 3) == 0);
    CHECK(volume_curve_of(zero).degenerate());
}

TEST_CASE("pushforward measures converge from below") {
    ConcaveTransform ct(unit_simplex(2), {{{q(1), q(0)}, q(0)}});
    Rational prev = 0;
    for (unsigned r : {4u, 8u, 16u, 64u}) {
        const auto mu = pushforward_measure(ct, r);
        Rational total = 0;
        for (const auto& a : mu.atoms()) total += a.mass;
        CHECK(total == 1);
        const Rational m1 = mu.moment(1);
        CHECK(m1 <= q(1, 3));
        CHECK(m1 >= prev);
        CHECK(q(1, 3) - m1 <= q(1, r));
        prev = m1;
    }
    ConcaveTransform flat(unit_simplex(2), {{{q(0), q(0)}, q(2)}});
    const auto mu = pushforward_measure(flat, 8);
    CHECK(mu.atoms().size() == 1);
    CHECK(mu.atoms()[0].location == 2);
    CHECK_THROWS_AS(SpectralMeasure({{q(0), q(1, 2)}}), Error);
}

TEST_CASE("random transforms: two routes and sandwich") {
    std::mt19937_64 rng(99);
    for (unsigned n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto ct = corpus::random_transform(n, rng);
            const Rational tmax = ct.max_value();
            Rational cells = 0;
            for (const auto& cell : ct.cells()) cells += cell.region.volume();
            CHECK(cells == ct.body().volume());
            for (unsigned p = 1; p <= 4; ++p) {
                const Rational m = moment_p(ct, p);
                CHECK(m == moment_p_layer_cake(ct, p));
                CHECK(m == s_p(volume_curve_of(ct), p));
                CHECK(m <= pow(tmax, p));
                CHECK(m >= beta_constant(p, n) * pow(tmax, p));
                CHECK(moment_p(ct.scaled_values(q(2)), p) == pow(q(2), p) * m);
            }
        }
    }
}
