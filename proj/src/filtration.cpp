#include "valinv/filtration.hpp"

#include "valinv/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace valinv {

namespace {

bool is_integer(const Rational& q) { return denominator(q) == 1; }

std::size_t count_at_most(const RVector& sorted, const Rational& c) {
    return static_cast<std::size_t>(std::upper_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
}

Rational exact_p(double p) { return Rational(p); }

}  // namespace

FlagFiltration::FlagFiltration(unsigned level, RVector jumps, std::optional<Flag> flag)
    : level_(level), jumps_(std::move(jumps)), flag_(std::move(flag)) {
    if (level_ == 0) fail(ErrorKind::domain, "filtration level must be positive");
    std::sort(jumps_.begin(), jumps_.end());
    if (!jumps_.empty() && jumps_.front() < 0) fail(ErrorKind::domain, "jumping numbers must be non-negative");
    if (!flag_) return;

    const Flag& fl = *flag_;
    if (fl.ambient != jumps_.size()) fail(ErrorKind::structure, "flag ambient dimension differs from the number of jumps");
    const RVector c = distinct_jumps();
    if (fl.members.size() + 1 != c.size())
        fail(ErrorKind::structure, "flag length does not match the number of distinct jumps");
    for (std::size_t k = 0; k < fl.members.size(); ++k) {
        for (const auto& row : fl.members[k])
            if (row.size() != fl.ambient) fail(ErrorKind::structure, "flag member has wrong row length");
        const std::size_t r = rank(fl.members[k]);
        const std::size_t codim = count_at_most(jumps_, c[k]);
        if (r + codim != fl.ambient) fail(ErrorKind::structure, "flag codimensions disagree with the jumping numbers");
        if (k > 0) {
            RMatrix both = fl.members[k - 1];
            both.insert(both.end(), fl.members[k].begin(), fl.members[k].end());
            if (rank(both) != rank(fl.members[k - 1])) fail(ErrorKind::structure, "flag is not nested");
        }
    }
}

RVector FlagFiltration::distinct_jumps() const {
    RVector c = jumps_;
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

Rational FlagFiltration::order_of(const RVector& s) const {
    if (!flag_) fail(ErrorKind::domain, "order_of needs a flag");
    if (s.size() != flag_->ambient) fail(ErrorKind::domain, "vector has wrong dimension");
    if (std::all_of(s.begin(), s.end(), [](const Rational& x) { return x == 0; }))
        fail(ErrorKind::domain, "order of the zero vector is infinite");
    const RVector c = distinct_jumps();
    std::size_t k = 0;
    while (k < flag_->members.size() && in_row_span(s, flag_->members[k])) ++k;
    return c[k];
}

Rational s_m_p(const FlagFiltration& f, unsigned p) {
    if (p == 0) fail(ErrorKind::domain, "moment order p must be positive");
    if (f.dim() == 0) fail(ErrorKind::domain, "empty filtration");
    Rational sum(0);
    for (const auto& a : f.jumps()) sum += pow(a / f.level(), p);
    return sum / static_cast<long>(f.dim());
}

Enclosure s_m_p_enclosure(const FlagFiltration& f, double p) {
    if (!(p >= 1.0)) fail(ErrorKind::domain, "real moment order must satisfy p >= 1");
    if (f.dim() == 0) fail(ErrorKind::domain, "empty filtration");
    Enclosure sum{Rational(0)};
    for (const auto& a : f.jumps()) sum += Enclosure::power(a / f.level(), p);
    return sum.mul_nonneg(Enclosure(Rational(1) / static_cast<long>(f.dim())));
}

double s_m_p_real(const FlagFiltration& f, double p) {
    const Enclosure e = s_m_p_enclosure(f, p);
    return 0.5 * (e.lower() + e.upper());
}

Rational t_m(const FlagFiltration& f) {
    if (f.dim() == 0) return Rational(0);
    return f.jumps().back() / f.level();
}

FlagFiltration round_to_integer_filtration(const FlagFiltration& f) {
    RVector floored;
    for (const auto& a : f.jumps()) floored.push_back(Rational(floor(a)));
    if (!f.flag()) return FlagFiltration(f.level(), std::move(floored));
    // merged jump values merge the corresponding flag members
    const RVector c = f.distinct_jumps();
    Flag fl{f.flag()->ambient, {}};
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
        if (floor(c[k]) != floor(c[k + 1])) fl.members.push_back(f.flag()->members[k]);
    return FlagFiltration(f.level(), std::move(floored), std::move(fl));
}

RMatrix compatible_basis(const Flag& flag) {
    std::vector<RMatrix> stages;
    RMatrix current;
    auto extend = [&](const RMatrix& rows) {
        RMatrix stage;
        for (const auto& row : rref(rows).rows) {
            if (row.size() != flag.ambient) fail(ErrorKind::structure, "flag member has wrong row length");
            if (in_row_span(row, current)) continue;
            current.push_back(row);
            stage.push_back(row);
        }
        stages.push_back(std::move(stage));
    };
    for (auto it = flag.members.rbegin(); it != flag.members.rend(); ++it) {
        const std::size_t before = current.size();
        RMatrix both = *it;
        both.insert(both.end(), current.begin(), current.end());
        if (rank(both) != rank(*it)) fail(ErrorKind::structure, "flag is not nested");
        extend(*it);
        if (current.size() == before) fail(ErrorKind::structure, "flag members must be strictly nested");
    }
    RMatrix standard;
    for (unsigned i = 0; i < flag.ambient; ++i) {
        RVector e(flag.ambient, Rational(0));
        e[i] = 1;
        standard.push_back(std::move(e));
    }
    extend(standard);

    RMatrix basis;
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) basis.insert(basis.end(), it->begin(), it->end());
    return basis;
}

Rational basis_value(const FlagFiltration& f, const RMatrix& basis, unsigned p) {
    if (basis.size() != f.dim() || rank(basis) != f.dim()) fail(ErrorKind::domain, "not a basis");
    Rational sum(0);
    for (const auto& b : basis) sum += pow(f.order_of(b) / f.level(), p);
    return sum / static_cast<long>(f.dim());
}

Rational sup_over_bases_oracle(const FlagFiltration& f, unsigned p, unsigned samples, std::uint64_t seed) {
    if (!f.flag()) fail(ErrorKind::domain, "the basis oracle needs a flag");
    const std::size_t d = f.dim();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::optional<Rational> best;
    for (unsigned s = 0; s < samples; ++s) {
        RMatrix basis;
        do {
            basis.assign(d, RVector(d));
            for (auto& row : basis)
                for (auto& x : row) x = entry(rng);
        } while (determinant(basis) == 0);
        const Rational value = basis_value(f, basis, p);
        if (!best || value > *best) best = value;
    }
    if (!best) fail(ErrorKind::domain, "at least one sample is required");
    return *best;
}

Rational telescoped_s_m_p(const FlagFiltration& f, unsigned p) {
    if (!f.flag()) fail(ErrorKind::domain, "telescoping needs a flag");
    const RVector c = f.distinct_jumps();
    std::vector<std::size_t> dims{f.flag()->ambient};
    for (const auto& w : f.flag()->members) dims.push_back(rank(w));
    dims.push_back(0);
    Rational sum(0);
    for (std::size_t k = 0; k < c.size(); ++k)
        sum += pow(c[k] / f.level(), p) * static_cast<long>(dims[k] - dims[k + 1]);
    return sum / static_cast<long>(f.dim());
}

SandwichCheck rounding_sandwich(const FlagFiltration& f, double p) {
    if (!(p >= 1.0)) fail(ErrorKind::domain, "real moment order must satisfy p >= 1");
    const FlagFiltration fn = round_to_integer_filtration(f);
    const Rational m(f.level());
    SandwichCheck out;

    if (p == std::floor(p) && p <= 4096) {
        const auto ip = static_cast<unsigned>(p);
        const Rational s = s_m_p(f, ip), sn = s_m_p(fn, ip);
        Rational correction;
        if (ip == 1) correction = Rational(1) / m;
        else correction = Rational(static_cast<long>(ip)) / m * s_m_p(f, ip - 1);
        out.upper = s >= sn;
        out.lower = sn >= s - correction;
        out.certified = true;
        return out;
    }

    // Non-integer p: the correction is (p/m^{p-1}) S^(1) for p < 2 and (p/m) S^(p-1) above.
    const Enclosure pe(exact_p(p));
    auto correction_term = [&](const Rational& a) {
        Enclosure c = p < 2.0 ? Enclosure::power(Rational(1) / m, p - 1.0).mul_nonneg(Enclosure(a / m))
                              : Enclosure::power(a / m, p - 1.0).mul_nonneg(Enclosure(Rational(1) / m));
        return c.mul_nonneg(pe);
    };
    const Enclosure s = s_m_p_enclosure(f, p), sn = s_m_p_enclosure(fn, p);
    Enclosure corr{Rational(0)};
    for (const auto& a : f.jumps()) corr += correction_term(a);
    corr.mul_nonneg(Enclosure(Rational(1) / static_cast<long>(f.dim())));
    out.upper = certainly_ge(s, sn);
    out.lower = certainly_ge(sn, s - corr);
    if (out.upper && out.lower) {
        out.certified = true;
        return out;
    }

    // Termwise: each jump satisfies both inequalities, with equality exactly when
    // the jump is an integer (upper) or zero (lower); sums then follow.
    bool upper = true, lower = true, decided = true;
    for (const auto& a : f.jumps()) {
        const Rational fl(floor(a));
        if (!is_integer(a)) {
            const Enclosure t = Enclosure::power(a / m, p), tn = Enclosure::power(fl / m, p);
            if (!certainly_ge(t, tn)) {
                decided = decided && !possibly_ge(t, tn);
                upper = false;
            }
        }
        if (a != 0) {
            const Enclosure t = Enclosure::power(a / m, p), tn = Enclosure::power(fl / m, p);
            const Enclosure rhs = t - correction_term(a);
            if (!certainly_ge(tn, rhs)) {
                decided = decided && !possibly_ge(tn, rhs);
                lower = false;
            }
        }
    }
    out.upper = upper;
    out.lower = lower;
    out.certified = decided;
    return out;
}

MonomialGradedFiltration::MonomialGradedFiltration(RationalPolytope polytope, RVector v)
    : polytope_(std::move(polytope)), v_(std::move(v)) {
    if (!polytope_.is_lattice()) fail(ErrorKind::domain, "monomial filtrations need a lattice polytope");
    if (v_.size() != polytope_.dim()) fail(ErrorKind::domain, "valuation vector has wrong dimension");
    min_ = polytope_.min_of(v_);
}

std::vector<std::vector<Integer>> MonomialGradedFiltration::lattice_points(unsigned k) const {
    if (k == 0) return {std::vector<Integer>(polytope_.dim(), Integer(0))};
    return polytope_.scaled(Rational(k)).lattice_points();
}

Rational MonomialGradedFiltration::weight(unsigned k, const std::vector<Integer>& u) const {
    Rational s(0);
    for (std::size_t i = 0; i < u.size(); ++i) s += Rational(u[i]) * v_[i];
    return s - min_ * k;
}

FlagFiltration MonomialGradedFiltration::level(unsigned k, bool with_flag) const {
    const auto pts = lattice_points(k);
    RVector w;
    for (const auto& u : pts) w.push_back(weight(k, u));
    if (!with_flag) return FlagFiltration(k, std::move(w));
    RVector c = w;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    Flag fl{static_cast<unsigned>(pts.size()), {}};
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        RMatrix member;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (w[j] <= c[i]) continue;
            RVector e(pts.size(), Rational(0));
            e[j] = 1;
            member.push_back(std::move(e));
        }
        fl.members.push_back(std::move(member));
    }
    return FlagFiltration(k, std::move(w), std::move(fl));
}

FlagFiltration GeneratedWeights::filtration() const { return FlagFiltration(level, weights); }

GeneratedWeights generated_filtration(const MonomialGradedFiltration& base, unsigned m, unsigned k) {
    if (m == 0 || k == 0) fail(ErrorKind::domain, "levels must be positive");
    if (k > 20 || base.polytope().dim() > 2)
        fail(ErrorKind::unsupported, "generated filtrations are limited to k <= 20 and dimension <= 2");

    const auto pieces = base.lattice_points(m);
    RVector piece_weight;
    for (const auto& u : pieces) piece_weight.push_back(Rational(floor(base.weight(m, u))));

    std::map<unsigned, RationalPolytope> scaled;
    auto in_level = [&](unsigned t, const std::vector<Integer>& x) {
        if (t == 0) return std::all_of(x.begin(), x.end(), [](const Integer& z) { return z == 0; });
        auto it = scaled.find(t);
        if (it == scaled.end()) it = scaled.emplace(t, base.polytope().scaled(Rational(t))).first;
        RVector xr(x.begin(), x.end());
        return it->second.contains(xr);
    };

    struct Entry {
        Rational best;
        bool decomposed;
    };
    std::map<std::pair<unsigned, std::vector<Integer>>, Entry> memo;
    // best weight of x ∈ tP over products of level-m pieces times a remainder
    auto solve = [&](auto&& self, unsigned t, const std::vector<Integer>& x) -> Entry {
        const auto key = std::make_pair(t, x);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Entry e{Rational(0), false};
        if (t >= m) {
            for (std::size_t i = 0; i < pieces.size(); ++i) {
                std::vector<Integer> y = x;
                for (std::size_t j = 0; j < y.size(); ++j) y[j] -= pieces[i][j];
                if (!in_level(t - m, y)) continue;
                const Rational value = piece_weight[i] + self(self, t - m, y).best;
                e.best = std::max(e.best, value);
                e.decomposed = true;
            }
        }
        memo.emplace(key, e);
        return e;
    };

    GeneratedWeights out;
    out.level = k;
    out.points = base.lattice_points(k);
    for (const auto& u : out.points) {
        const Entry e = solve(solve, k, u);
        out.weights.push_back(e.best);
        out.decomposed.push_back(e.decomposed);
    }
    return out;
}

}  // namespace valinv
