#include "valinv/invariants.hpp"

#include "valinv/error.hpp"
#include "valinv/special.hpp"

#include <cmath>
#include <sstream>

namespace valinv {

namespace {

bool integral_order(double p) { return p == std::floor(p) && p <= 64; }

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

std::string vec(const RVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

}  // namespace

Rational alpha_candidate(const std::vector<Candidate>& candidates) {
    if (candidates.empty()) fail(ErrorKind::domain, "empty candidate set");
    Rational best = candidates.front().log_discrepancy / candidates.front().tau;
    for (const auto& c : candidates) best = std::min(best, c.log_discrepancy / c.tau);
    return best;
}

Rational alpha_candidate(const ToricModel& tm, unsigned bound) { return alpha_candidate(candidate_table(tm, bound)); }

InvariantReport delta_family(const ToricModel& tm, const std::vector<double>& p_grid, unsigned bound) {
    const auto candidates = candidate_table(tm, bound);
    const unsigned n = tm.dim();
    InvariantReport r;
    r.dim = n;
    r.p_grid = p_grid;
    r.alpha_upper = alpha_candidate(candidates);
    for (double p : p_grid) r.deltas.push_back(delta_p_search(candidates, p));

    for (std::size_t i = 0; i + 1 < r.deltas.size(); ++i) {
        if (p_grid[i + 1] < p_grid[i]) continue;
        if (r.deltas[i + 1].value > r.deltas[i].value * (1.0 + 1e-12)) {
            r.monotonicity_breaks.push_back(i);
            r.violations.push_back("delta^(p) nonincreasing violated at p=" + fmt(p_grid[i + 1]));
        }
    }
    if (!r.deltas.empty()) r.alpha_gap = r.deltas.back().value - to_double(r.alpha_upper);

    const Rational nr(n);
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        if (p_grid[i] != 1.0) continue;
        const Rational d1 = *r.deltas[i].value_pow;
        r.alpha_sandwich = (nr + 1) / nr * r.alpha_upper <= d1 && d1 <= (nr + 1) * r.alpha_upper;
        if (!*r.alpha_sandwich) r.violations.push_back("alpha-delta sandwich violated at p=1");
    }

    for (const auto& c : candidates) {
        for (double p : p_grid) {
            bool holds;
            if (integral_order(p)) {
                const auto ip = static_cast<unsigned>(p);
                const auto b = barycenter_bounds_exact(c.curve, ip);
                const Rational s = s_p(c.curve, ip);
                holds = b.lower <= s && s <= b.upper;
            } else {
                const auto b = barycenter_bounds(c.curve, p);
                const double s = s_p_real(c.curve, p);
                const double slack = 1e-9 * std::max(1.0, b.upper);
                holds = b.lower <= s + slack && s <= b.upper + slack;
            }
            if (!holds) {
                r.brackets_hold = false;
                r.violations.push_back("per-candidate delta bracket violated at v=" + vec(c.valuation.v) + " p=" + fmt(p));
            }
            if (integral_order(p) && p > 1) {
                const auto ip = static_cast<unsigned>(p);
                const Rational rhs =
                    pow((nr + 1) / nr, ip) * nr / (nr + Rational(ip)) * pow(s_p(c.curve, 1), ip);
                if (!(s_p(c.curve, ip) >= rhs)) {
                    r.key_monotonicity_holds = false;
                    r.violations.push_back("S^(p) key monotonicity violated at v=" + vec(c.valuation.v) + " p=" + fmt(p));
                }
            }
        }
    }
    return r;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::exceeds_threshold: return "exceeds-threshold";
        case Verdict::below_threshold: return "below-threshold";
        case Verdict::borderline: return "borderline";
    }
    return "borderline";
}

bool h_positive_exact(unsigned n, unsigned p) {
    Rational prod(1);
    for (unsigned i = 1; i < n; ++i) prod *= Rational(Integer(p + i), Integer(i));
    return pow(Rational(n), p) > prod;
}

double h_function(unsigned n, double p) {
    double h = p * std::log(static_cast<double>(n));
    for (unsigned i = 1; i < n; ++i) h -= std::log((p + i) / i);
    return h;
}

KStabilityVerdict kstability_verdict(const ToricModel& tm, double p, unsigned bound, double rel_tol) {
    return kstability_verdict(tm, candidate_table(tm, bound), p, rel_tol);
}

KStabilityVerdict kstability_verdict(const ToricModel& tm, const std::vector<Candidate>& candidates, double p,
                                     double rel_tol) {
    const auto lambda = tm.anticanonical_ratio();
    if (!lambda) fail(ErrorKind::semantic, "polarization is not proportional to -K; pass the anticanonical polytope");
    const unsigned n = tm.dim();
    const double nd = n;
    const DeltaSearch d = delta_p_search(candidates, p);

    KStabilityVerdict out;
    out.p = p;
    out.lambda = *lambda;
    out.argmin = d.argmin;
    // δ(-K) = λ δ(L) for L = λ(-K)
    out.delta_upper = to_double(*lambda) * d.value;
    out.threshold = nd / (nd + 1) * std::pow((nd + p) / nd, 1.0 / p);
    out.boundary_value = std::pow(1.0 / beta_constant_real(p, nd), 1.0 / p) / (nd + 1);
    out.h = h_function(n, p);

    if (integral_order(p)) {
        const auto ip = static_cast<unsigned>(p);
        const Rational nr(n);
        out.delta_pow = pow(*lambda, ip) * *d.value_pow;
        out.threshold_pow = pow(nr / (nr + 1), ip) * (nr + Rational(ip)) / nr;
        if (*out.delta_pow == *out.threshold_pow) out.verdict = Verdict::borderline;
        else out.verdict = *out.delta_pow > *out.threshold_pow ? Verdict::exceeds_threshold : Verdict::below_threshold;
        if (n >= 2 && ip > 1) out.h_positive = h_positive_exact(n, ip);
    } else {
        const double gap = out.delta_upper - out.threshold;
        if (std::abs(gap) <= rel_tol * out.threshold) out.verdict = Verdict::borderline;
        else out.verdict = gap > 0 ? Verdict::exceeds_threshold : Verdict::below_threshold;
        if (n >= 2 && p > 1) out.h_positive = out.h > 0;
    }
    return out;
}

Rational delta_bar_pow(const ToricModel& tm, const ToricValuation& tv, unsigned p) {
    const VolumeCurve c = volume_curve_of(tm, tv);
    return pow(log_discrepancy(tm, tv), p) / (c.volume() * s_p(c, p));
}

double delta_bar_p(const ToricModel& tm, const ToricValuation& tv, double p) {
    if (integral_order(p)) return std::pow(to_double(delta_bar_pow(tm, tv, static_cast<unsigned>(p))), 1.0 / p);
    const VolumeCurve c = volume_curve_of(tm, tv);
    // (V S)^{1/p} = V^{1/p} S^{1/p}
    return to_double(log_discrepancy(tm, tv)) /
           (std::pow(to_double(c.volume()), 1.0 / p) * s_p_root_real(c, p));
}

std::vector<DeltaSearch> continuity_scan(const ToricModel& tm, double p, unsigned bound, const RVector& t_grid) {
    std::vector<DeltaSearch> out;
    for (const auto& t : t_grid) {
        std::vector<Halfspace> hs = tm.polytope().facets();
        hs.front().bound -= t;
        const auto pt = RationalPolytope::from_halfspaces(tm.dim(), std::move(hs));
        if (!pt.full_dimensional()) fail(ErrorKind::domain, "facet shift t=" + valinv::to_string(t) + " collapses the polytope");
        out.push_back(delta_p_search(ToricModel::from_polytope(pt), p, bound));
    }
    return out;
}

}  // namespace valinv
