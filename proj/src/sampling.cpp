#include "valinv/sampling.hpp"

#include <algorithm>

namespace valinv {

long uniform_int(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

RMatrix random_invertible(std::size_t d, std::mt19937_64& rng) {
    for (;;) {
        RMatrix b(d, RVector(d));
        for (auto& row : b)
            for (auto& x : row) x = Rational(uniform_int(rng, -3, 3));
        if (determinant(b) != 0) return b;
    }
}

FlagFiltration random_flag_filtration(std::size_t d, unsigned m, std::mt19937_64& rng, bool integral) {
    RVector jumps;
    for (std::size_t i = 0; i < d; ++i) {
        const long den = integral ? 1 : uniform_int(rng, 1, 4);
        jumps.push_back(make_rational(uniform_int(rng, 0, 3 * static_cast<long>(m) * den), den));
    }
    std::sort(jumps.begin(), jumps.end());
    RVector c = jumps;
    c.erase(std::unique(c.begin(), c.end()), c.end());
    const RMatrix b = random_invertible(d, rng);
    Flag fl{static_cast<unsigned>(d), {}};
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        const auto codim = std::upper_bound(jumps.begin(), jumps.end(), c[k]) - jumps.begin();
        fl.members.emplace_back(b.begin() + codim, b.end());
    }
    return FlagFiltration(m, std::move(jumps), std::move(fl));
}

TestCurve1D random_test_curve(std::mt19937_64& rng) {
    std::vector<long> slopes;
    for (long i = uniform_int(rng, 1, 5); i > 0; --i) slopes.push_back(-uniform_int(rng, 0, 12));
    std::sort(slopes.rbegin(), slopes.rend());
    RVector lambdas{Rational(0)}, values{Rational(0)};
    for (long s : slopes) {
        const Rational width = make_rational(uniform_int(rng, 1, 6), uniform_int(rng, 1, 3));
        lambdas.push_back(lambdas.back() + width);
        values.push_back(values.back() + make_rational(s, 2) * width);
    }
    return TestCurve1D(std::move(lambdas), std::move(values));
}

}  // namespace valinv
