#include "valinv/toric.hpp"

#include "valinv/error.hpp"
#include "valinv/okounkov.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace valinv {

namespace {

RationalPolytope simplex_polytope(unsigned n, const Rational& scale, const Rational& shift) {
    std::vector<RVector> pts{RVector(n, shift)};
    for (unsigned i = 0; i < n; ++i) {
        RVector e(n, shift);
        e[i] += scale;
        pts.push_back(std::move(e));
    }
    return RationalPolytope::from_vertices(n, std::move(pts));
}

unsigned parse_unsigned(const std::string& text, const std::string& name) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isdigit(ch); }))
        fail(ErrorKind::input, "unknown built-in model '" + name + "'");
    return static_cast<unsigned>(std::stoul(text));
}

bool integer_vector(const RVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return denominator(x) == 1; });
}

}  // namespace

ToricModel ToricModel::from_polytope(RationalPolytope p) {
    if (p.dim() == 0) fail(ErrorKind::input, "model dimension must be positive");
    if (!p.full_dimensional()) fail(ErrorKind::input, "model polytope must be full-dimensional");
    ToricModel tm;
    tm.p_ = std::move(p);
    for (const auto& h : tm.p_.facets()) {
        tm.rays_.push_back(h.normal);
        tm.offsets_.push_back(-h.bound);
    }
    for (const auto& vertex : tm.p_.vertices()) {
        FanCone cone{vertex, {}, std::nullopt};
        RMatrix rows;
        for (std::size_t r = 0; r < tm.rays_.size(); ++r) {
            if (tm.p_.facets()[r].slack(vertex) != 0) continue;
            cone.rays.push_back(r);
            rows.push_back(tm.rays_[r]);
        }
        cone.m_sigma = solve(rows, RVector(rows.size(), Rational(1)));
        tm.q_gorenstein_ = tm.q_gorenstein_ && cone.m_sigma.has_value();
        tm.cones_.push_back(std::move(cone));
    }
    return tm;
}

ToricModel ToricModel::builtin(const std::string& name) {
    if (name == "p2") return from_polytope(simplex_polytope(2, Rational(1), Rational(0)));
    if (name == "p2-anticanonical") return from_polytope(simplex_polytope(2, Rational(3), Rational(-1)));
    if (name == "p1xp1")
        return from_polytope(RationalPolytope::from_vertices(
            2, {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)}}));
    if (name.rfind("pn:", 0) == 0) {
        const unsigned n = parse_unsigned(name.substr(3), name);
        if (n == 0 || n > 6) fail(ErrorKind::input, "pn:<n> needs 1 <= n <= 6");
        return from_polytope(simplex_polytope(n, Rational(1), Rational(0)));
    }
    if (name.rfind("hirzebruch-", 0) == 0) {
        // {x >= 0, 0 <= y <= 1, x + a y <= a + 1}
        const unsigned a = parse_unsigned(name.substr(11), name);
        if (a > 16) fail(ErrorKind::input, "hirzebruch-<a> needs a <= 16");
        const Rational ra(a);
        return from_polytope(RationalPolytope::from_vertices(
            2, {{Rational(0), Rational(0)}, {ra + 1, Rational(0)}, {Rational(1), Rational(1)}, {Rational(0), Rational(1)}}));
    }
    fail(ErrorKind::input, "unknown built-in model '" + name + "'");
}

Rational ToricModel::volume() const { return p_.volume() * Rational(factorial(dim())); }

ToricModel ToricModel::scaled(const Rational& lambda) const {
    if (!(lambda > 0)) fail(ErrorKind::domain, "scaling factor must be positive");
    return from_polytope(p_.scaled(lambda));
}

ToricModel ToricModel::anticanonical() const {
    std::vector<Halfspace> hs;
    for (const auto& u : rays_) hs.push_back({u, Rational(-1)});
    ToricModel k = from_polytope(RationalPolytope::from_halfspaces(dim(), std::move(hs)));
    const std::set<RVector> mine(rays_.begin(), rays_.end()), theirs(k.rays_.begin(), k.rays_.end());
    if (mine != theirs) fail(ErrorKind::unsupported, "-K is not ample on this model");
    return k;
}

std::optional<Rational> ToricModel::anticanonical_ratio() const {
    // ⟨u_ρ, c⟩ - λ = -a_ρ for all ρ
    RMatrix a;
    RVector b;
    for (std::size_t r = 0; r < rays_.size(); ++r) {
        RVector row = rays_[r];
        row.push_back(Rational(-1));
        a.push_back(std::move(row));
        b.push_back(-offsets_[r]);
    }
    const auto sol = solve(a, b);
    if (!sol || !(sol->back() > 0)) return std::nullopt;
    return sol->back();
}

ToricValuation make_valuation(const ToricModel& tm, const RVector& v) {
    if (v.size() != tm.dim()) fail(ErrorKind::input, "valuation vector has wrong dimension");
    if (!integer_vector(v)) fail(ErrorKind::input, "valuation vector must be integral");
    Integer g(0);
    for (const auto& x : v) g = gcd(g, abs(numerator(x)));
    if (g == 0) fail(ErrorKind::domain, "valuation vector must be nonzero");
    if (g != 1) fail(ErrorKind::domain, "valuation vector must be primitive");
    return {v, -tm.polytope().min_of(v)};
}

VolumeCurve volume_curve_of(const ToricModel& tm, const ToricValuation& tv) {
    return volume_curve_of(ConcaveTransform(tm.polytope(), {AffineForm{tv.v, tv.offset}}));
}

Rational log_discrepancy(const ToricModel& tm, const ToricValuation& tv) {
    if (!tm.q_gorenstein()) fail(ErrorKind::unsupported, "log discrepancy needs a Q-Gorenstein model");
    const Rational lowest = tm.polytope().min_of(tv.v);
    for (const auto& cone : tm.cones()) {
        if (dot(cone.vertex, tv.v) != lowest) continue;
        const Rational a = dot(*cone.m_sigma, tv.v);
        if (!(a > 0)) fail(ErrorKind::invariant, "non-positive log discrepancy");
        return a;
    }
    fail(ErrorKind::invariant, "valuation lies in no cone of the fan");
}

FlagFiltration section_filtration(const ToricModel& tm, const ToricValuation& tv, unsigned m, bool with_flag) {
    return MonomialGradedFiltration(tm.polytope(), tv.v).level(m, with_flag);
}

std::vector<Candidate> candidate_table(const ToricModel& tm, unsigned bound) {
    if (bound == 0) fail(ErrorKind::input, "search bound must be at least 1");
    const unsigned n = tm.dim();
    const long b = bound;
    std::vector<Candidate> out;
    std::vector<long> digits(n, -b);
    for (;;) {
        Integer g(0);
        for (long d : digits) g = gcd(g, Integer(std::abs(d)));
        if (g == 1) {
            RVector v;
            for (long d : digits) v.push_back(Rational(d));
            const ToricValuation tv = make_valuation(tm, v);
            VolumeCurve curve = volume_curve_of(tm, tv);
            const Rational tau = curve.tau();
            out.push_back({tv, log_discrepancy(tm, tv), tau, std::move(curve)});
        }
        std::size_t i = n;
        while (i > 0 && digits[i - 1] == b) digits[--i] = -b;
        if (i == 0) break;
        ++digits[i - 1];
    }
    return out;
}

DeltaSearch delta_p_search(const std::vector<Candidate>& candidates, double p) {
    if (!(p >= 1.0)) fail(ErrorKind::domain, "real moment order must satisfy p >= 1");
    if (candidates.empty()) fail(ErrorKind::domain, "empty candidate set");
    DeltaSearch out;
    out.p = p;
    const bool integral = p == std::floor(p) && p <= 64;
    const auto ip = static_cast<unsigned>(p);
    std::optional<Rational> best_pow;
    bool first = true;
    for (const auto& c : candidates) {
        DeltaRow row{c.valuation.v, c.log_discrepancy, 0.0, std::nullopt, 0.0};
        bool better = false;
        if (integral) {
            const Rational s = s_p(c.curve, ip);
            const Rational rp = pow(c.log_discrepancy, ip) / s;
            row.s_p_exact = s;
            row.s_p = to_double(s);
            row.ratio = std::pow(to_double(rp), 1.0 / p);
            better = first || rp < *best_pow;
            if (better) best_pow = rp;
        } else {
            const double root = s_p_root_real(c.curve, p);
            row.s_p = std::pow(root, p);
            row.ratio = to_double(c.log_discrepancy) / root;
            better = first || row.ratio < out.value * (1.0 - 1e-12);
        }
        if (better) {
            out.value = row.ratio;
            out.argmin = row.v;
        }
        first = false;
        out.table.push_back(std::move(row));
    }
    out.value_pow = best_pow;
    return out;
}

DeltaSearch delta_p_search(const ToricModel& tm, double p, unsigned bound) {
    return delta_p_search(candidate_table(tm, bound), p);
}

}  // namespace valinv
