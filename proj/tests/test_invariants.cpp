#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "valinv/error.hpp"
#include "valinv/invariants.hpp"
#include "valinv/special.hpp"

#include <cmath>

using namespace valinv;
using corpus::q;

namespace {

ToricModel projective_line(long degree) { return ToricModel::builtin("pn:1").scaled(q(degree)); }

}  // namespace

TEST_CASE("alpha candidates") {
    const auto k = ToricModel::builtin("p2-anticanonical");
    CHECK(alpha_candidate(k, 3) == q(1, 3));
    CHECK(alpha_candidate(projective_line(2), 3) == q(1, 2));
    CHECK(alpha_candidate(k.scaled(q(2)), 3) == q(1, 6));
    CHECK(alpha_candidate(k.scaled(q(3, 5)), 2) == q(5, 9));
}

TEST_CASE("delta family of the projective plane") {
    const auto k = ToricModel::builtin("p2-anticanonical");
    const std::vector<double> grid{1, 2, 4, 8, 16};
    const auto r = delta_family(k, grid, 3);
    CHECK(r.ok());
    CHECK(r.monotonicity_breaks.empty());
    CHECK(r.deltas[0].value_pow == 1);
    CHECK(r.deltas[1].value_pow == q(2, 3));
    REQUIRE(r.alpha_sandwich.has_value());
    CHECK(*r.alpha_sandwich);
    CHECK(r.brackets_hold);
    CHECK(r.key_monotonicity_holds);
    CHECK(r.alpha_gap > 0);
    const double alpha = to_double(r.alpha_upper);
    double prev_gap = 1e9;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double p = grid[i], n = 2;
        const double d = r.deltas[i].value;
        CHECK(std::pow((n + p) / n, 1 / p) * alpha <= d * (1 + 1e-12));
        CHECK(d <= std::pow(1 / beta_constant_real(p, n), 1 / p) * alpha * (1 + 1e-12));
        CHECK(d - alpha < prev_gap);
        prev_gap = d - alpha;
    }
}

TEST_CASE("delta families of random polygons") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 6; ++trial) {
        const auto tm = ToricModel::from_polytope(corpus::random_polytope(2, rng));
        const auto r = delta_family(tm, {1, 1.5, 2, 3, 5}, 2);
        CHECK(r.ok());
        for (const auto& v : r.violations) MESSAGE(v);
    }
}

TEST_CASE("K-stability verdicts") {
    const auto p2 = ToricModel::builtin("p2-anticanonical");
    const auto v2 = kstability_verdict(p2, 2.0, 3);
    CHECK(v2.verdict == Verdict::below_threshold);
    CHECK(v2.delta_upper == doctest::Approx(std::sqrt(6.0) / 3).epsilon(1e-12));
    CHECK(v2.threshold == doctest::Approx(2.0 / 3 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(v2.delta_pow == q(2, 3));
    CHECK(v2.threshold_pow == q(8, 9));
    CHECK(v2.boundary_value == doctest::Approx(std::sqrt(6.0) / 3).epsilon(1e-12));
    REQUIRE(v2.h_positive.has_value());
    CHECK(*v2.h_positive);

    CHECK(kstability_verdict(p2, 1.0, 3).verdict == Verdict::borderline);
    CHECK(kstability_verdict(p2, 1.5, 3).verdict == Verdict::below_threshold);
    // O(1) is (1/3)(-K): same verdict after rescaling
    const auto small = kstability_verdict(ToricModel::builtin("p2"), 2.0, 3);
    CHECK(small.lambda == q(1, 3));
    CHECK(small.delta_pow == q(2, 3));

    for (unsigned p = 2; p <= 3; ++p) {
        const auto v = kstability_verdict(projective_line(2), p, 3);
        CHECK(v.verdict == Verdict::borderline);
        CHECK(v.delta_pow == v.threshold_pow);
        CHECK_FALSE(v.h_positive.has_value());
    }
    CHECK(kstability_verdict(projective_line(1), 2.5, 3).verdict == Verdict::borderline);

    CHECK(h_function(2, 1.0) == 0.0);
    CHECK_FALSE(h_positive_exact(2, 1));
    for (unsigned n = 2; n <= 4; ++n)
        for (unsigned p = 2; p <= 8; ++p) CHECK(h_positive_exact(n, p));

    try {
        (void)kstability_verdict(ToricModel::builtin("hirzebruch-1"), 1.0, 2);
        FAIL("expected a semantic error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::semantic);
    }
}

TEST_CASE("unnormalized delta bar") {
    const auto k = ToricModel::builtin("p2-anticanonical");
    const auto e1 = make_valuation(k, {q(1), q(0)});
    CHECK(delta_bar_pow(k, e1, 1) == q(1, 9));
    CHECK(delta_bar_p(k, e1, 1.0) == doctest::Approx(1.0 / 9));
    const auto k2 = k.scaled(q(2));
    const auto e1b = make_valuation(k2, {q(1), q(0)});
    CHECK(delta_bar_pow(k2, e1b, 1) == q(1, 72));
    for (unsigned p = 1; p <= 4; ++p)
        CHECK(delta_bar_pow(k2, e1b, p) == delta_bar_pow(k, e1, p) / pow(q(2), 2 + p));
    CHECK(delta_bar_p(k2, e1b, 1.5) == doctest::Approx(delta_bar_p(k, e1, 1.5) * std::pow(2.0, -3.5 / 1.5)));

    // P ⊆ 2P since the origin is interior: every candidate ratio can only drop
    for (const auto& c : candidate_table(k, 2)) {
        const auto big = make_valuation(k2, c.valuation.v);
        for (unsigned p = 1; p <= 3; ++p) CHECK(delta_bar_pow(k2, big, p) <= delta_bar_pow(k, c.valuation, p));
    }
}

TEST_CASE("continuity probe") {
    const auto k = ToricModel::builtin("p2-anticanonical");
    const auto scan = continuity_scan(k, 2.0, 2, {q(0), q(1, 1000), q(1, 4), q(1)});
    REQUIRE(scan.size() == 4);
    CHECK(scan[0].value_pow == q(2, 3));
    CHECK(std::abs(scan[1].value - scan[0].value) < 1e-2);
    CHECK_THROWS_AS(continuity_scan(k, 2.0, 2, {q(-3)}), Error);
}
