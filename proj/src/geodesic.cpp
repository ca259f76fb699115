#include "valinv/geodesic.hpp"

#include "valinv/error.hpp"

#include <algorithm>
#include <cmath>

namespace valinv {

TestCurve1D::TestCurve1D(RVector lambdas, RVector values) {
    if (lambdas.empty() || lambdas.size() != values.size()) fail(ErrorKind::domain, "test curve needs matching breakpoints and values");
    if (lambdas.front() != 0 || values.front() != 0) throw InvariantViolation("TestCurve1D psi(0) = 0", "lambda=0");
    for (std::size_t i = 1; i < lambdas.size(); ++i)
        if (!(lambdas[i] > lambdas[i - 1])) fail(ErrorKind::domain, "test curve breakpoints must increase");

    Rational prev_slope;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (i + 1 < lambdas.size()) {
            const Rational s = (values[i + 1] - values[i]) / (lambdas[i + 1] - lambdas[i]);
            if (s > 0) throw InvariantViolation("TestCurve1D nonincreasing", "lambda=" + to_string(lambdas[i]));
            if (i > 0 && s > prev_slope) throw InvariantViolation("TestCurve1D concavity", "lambda=" + to_string(lambdas[i]));
            // drop the point between two collinear pieces
            if (i > 0 && s == prev_slope) continue;
            prev_slope = s;
        }
        lambdas_.push_back(lambdas[i]);
        values_.push_back(values[i]);
    }
}

TestCurve1D TestCurve1D::shifted_trivial(const Rational& c) {
    if (c < 0) fail(ErrorKind::domain, "shift must be non-negative");
    if (c == 0) return TestCurve1D({Rational(0)}, {Rational(0)});
    return TestCurve1D({Rational(0), c}, {Rational(0), Rational(0)});
}

RVector TestCurve1D::slopes() const {
    RVector s;
    for (std::size_t i = 0; i + 1 < lambdas_.size(); ++i)
        s.push_back((values_[i + 1] - values_[i]) / (lambdas_[i + 1] - lambdas_[i]));
    return s;
}

Rational TestCurve1D::operator()(const Rational& lambda) const {
    if (lambda < 0 || lambda > lambda_max()) fail(ErrorKind::domain, "psi is -inf outside [0, lambda_max]");
    const auto it = std::upper_bound(lambdas_.begin(), lambdas_.end(), lambda);
    const auto i = static_cast<std::size_t>(it - lambdas_.begin()) - 1;
    if (i + 1 == lambdas_.size()) return values_.back();
    return values_[i] + (values_[i + 1] - values_[i]) * (lambda - lambdas_[i]) / (lambdas_[i + 1] - lambdas_[i]);
}

GeodesicRay1D::GeodesicRay1D(RVector breaks, RVector slopes) : breaks_(std::move(breaks)), slopes_(std::move(slopes)) {
    if (slopes_.size() != breaks_.size() + 1) fail(ErrorKind::domain, "geodesic ray needs one more slope than breaks");
    if (slopes_.front() < 0) throw InvariantViolation("GeodesicRay1D nondecreasing", "t=0");
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        if (!(breaks_[i] > (i ? breaks_[i - 1] : Rational(0))))
            fail(ErrorKind::domain, "geodesic ray breaks must be positive and increasing");
        if (!(slopes_[i + 1] > slopes_[i])) throw InvariantViolation("GeodesicRay1D convexity", "t=" + to_string(breaks_[i]));
    }
}

Rational GeodesicRay1D::intercept(std::size_t piece) const {
    // φ is continuous with φ(0) = 0
    Rational b(0);
    for (std::size_t i = 0; i < piece; ++i) b -= (slopes_[i + 1] - slopes_[i]) * breaks_[i];
    return b;
}

Rational GeodesicRay1D::operator()(const Rational& t) const {
    if (t < 0) fail(ErrorKind::domain, "geodesic ray is defined for t >= 0");
    const auto piece = static_cast<std::size_t>(std::upper_bound(breaks_.begin(), breaks_.end(), t) - breaks_.begin());
    return intercept(piece) + slopes_[piece] * t;
}

GeodesicRay1D legendre(const TestCurve1D& tc) {
    // vertex i is active for t in [-s_{i-1}, -s_i]; a flat first piece makes
    // vertex 0 active only at t = 0
    const RVector s = tc.slopes();
    const RVector& lam = tc.lambdas();
    RVector breaks, slopes;
    std::size_t first = 0;
    if (!s.empty() && s.front() == 0) first = 1;
    slopes.push_back(lam[first]);
    for (std::size_t i = first; i < s.size(); ++i) {
        breaks.push_back(-s[i]);
        slopes.push_back(lam[i + 1]);
    }
    return GeodesicRay1D(std::move(breaks), std::move(slopes));
}

TestCurve1D inverse_legendre(const GeodesicRay1D& gr, const Rational& lambda_max) {
    if (lambda_max < 0) fail(ErrorKind::domain, "lambda_max must be non-negative");
    RVector lambdas{Rational(0)}, values{Rational(0)};
    for (std::size_t i = 0; i < gr.slopes().size(); ++i) {
        const Rational& l = gr.slopes()[i];
        if (l > lambda_max) {
            // cap the domain inside piece i-1 of ψ
            if (lambdas.back() < lambda_max) {
                const Rational t = i == 0 ? Rational(0) : gr.breaks()[i - 1];
                lambdas.push_back(lambda_max);
                values.push_back(gr(t) - t * lambda_max);
            }
            return TestCurve1D(std::move(lambdas), std::move(values));
        }
        if (l == 0) continue;
        lambdas.push_back(l);
        values.push_back(gr.intercept(i));
    }
    return TestCurve1D(std::move(lambdas), std::move(values));
}

bool growth_bound_holds(const GeodesicRay1D& gr, const Rational& T) {
    // φ is convex and piecewise linear: checking breakpoints and the final slope suffices
    if (gr.slopes().back() > T || gr.slopes().front() < 0) return false;
    for (const auto& t : gr.breaks()) {
        const Rational v = gr(t);
        if (v < 0 || v > T * t) return false;
    }
    return true;
}

double dp_speed(const SpectralMeasure& mu, double p) {
    if (!(p >= 1.0)) fail(ErrorKind::domain, "real moment order must satisfy p >= 1");
    if (p == std::floor(p) && p <= 64) return std::pow(to_double(mu.moment(static_cast<unsigned>(p))), 1.0 / p);
    return std::pow(mu.moment_real(p), 1.0 / p);
}

double dp_speed(const ConcaveTransform& ct, double p) {
    if (!(p >= 1.0)) fail(ErrorKind::domain, "real moment order must satisfy p >= 1");
    if (p == std::floor(p) && p <= 64) return std::pow(to_double(moment_p(ct, static_cast<unsigned>(p))), 1.0 / p);
    return s_p_root_real(volume_curve_of(ct), p);
}

SpectralMeasure jumping_measure(const FlagFiltration& f) {
    if (f.dim() == 0) fail(ErrorKind::domain, "empty filtration");
    std::vector<SpectralMeasure::Atom> atoms;
    const Rational w = Rational(1) / static_cast<long>(f.dim());
    for (const auto& a : f.jumps()) atoms.push_back({a / f.level(), w});
    return SpectralMeasure(std::move(atoms));
}

std::vector<double> normalized_speed_profile(const SpectralMeasure& mu, unsigned n, const std::vector<double>& p_grid) {
    std::vector<double> out;
    const double nd = n;
    for (double p : p_grid) out.push_back(std::pow((nd + p) / nd, 1.0 / p) * dp_speed(mu, p));
    return out;
}

MomentIdentityReport verify_moment_identity(const ToricModel& tm, const ToricValuation& tv, double p, unsigned m_max) {
    if (m_max == 0) fail(ErrorKind::domain, "m_max must be positive");
    const ConcaveTransform ct(tm.polytope(), {AffineForm{tv.v, tv.offset}});
    MomentIdentityReport r;
    r.p = p;
    const double continuous = dp_speed(ct, p);
    for (unsigned m = 1; m <= m_max; m *= 2) {
        const double quantized = dp_speed(jumping_measure(section_filtration(tm, tv, m)), p);
        r.rows.push_back({m, quantized, continuous, std::abs(quantized - continuous)});
    }
    r.converging = true;
    for (std::size_t i = 1; i < r.rows.size(); ++i)
        if (r.rows[i].gap > r.rows[i - 1].gap + 1e-12) r.converging = false;
    const double tau = to_double(ct.max_value());
    const auto& last = r.rows.back();
    if (last.gap > (tm.dim() + 1) * tau / last.m) r.converging = false;

    const double n = tm.dim();
    r.normalized_nondecreasing = true;
    for (unsigned q = 1; q <= 8; ++q) {
        r.normalized_speeds.push_back(std::pow((n + q) / n, 1.0 / q) * dp_speed(ct, q));
        if (q > 1 && r.normalized_speeds[q - 1] < r.normalized_speeds[q - 2] * (1 - 1e-12)) r.normalized_nondecreasing = false;
    }
    return r;
}

}  // namespace valinv
