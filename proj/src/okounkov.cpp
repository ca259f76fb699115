#include "valinv/okounkov.hpp"

#include "valinv/error.hpp"
#include "valinv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace valinv {

SpectralMeasure::SpectralMeasure(std::vector<Atom> atoms) {
    std::map<Rational, Rational> merged;
    Rational total(0);
    for (auto& a : atoms) {
        if (a.location < 0) fail(ErrorKind::domain, "spectral atom at negative location " + to_string(a.location));
        if (!(a.mass > 0)) fail(ErrorKind::domain, "spectral atom mass must be positive");
        merged[a.location] += a.mass;
        total += a.mass;
    }
    if (total != 1) throw InvariantViolation("spectral measure total mass = 1", "mass=" + to_string(total));
    for (auto& [loc, mass] : merged) atoms_.push_back({loc, mass});
}

Rational SpectralMeasure::moment(unsigned p) const {
    Rational s(0);
    for (const auto& a : atoms_) s += a.mass * pow(a.location, p);
    return s;
}

double SpectralMeasure::moment_real(double p) const {
    double s = 0.0;
    for (const auto& a : atoms_) s += to_double(a.mass) * std::pow(to_double(a.location), p);
    return s;
}

ConcaveTransform::ConcaveTransform(RationalPolytope body, std::vector<AffineForm> forms, bool nonneg)
    : body_(std::move(body)), nonneg_(nonneg) {
    if (!body_.full_dimensional()) fail(ErrorKind::domain, "concave transform needs a full-dimensional body");
    if (forms.empty()) fail(ErrorKind::domain, "concave transform needs at least one affine form");
    for (const auto& f : forms) {
        if (f.linear.size() != body_.dim()) fail(ErrorKind::domain, "affine form dimension mismatch");
        if (std::find(forms_.begin(), forms_.end(), f) == forms_.end()) forms_.push_back(f);
    }

    for (std::size_t k = 0; k < forms_.size(); ++k) {
        std::vector<Halfspace> extra;
        bool never_min = false;
        for (std::size_t j = 0; j < forms_.size() && !never_min; ++j) {
            if (j == k) continue;
            RVector normal(body_.dim());
            bool zero = true;
            for (unsigned i = 0; i < body_.dim(); ++i) {
                normal[i] = forms_[j].linear[i] - forms_[k].linear[i];
                if (normal[i] != 0) zero = false;
            }
            const Rational bound = forms_[k].constant - forms_[j].constant;
            if (zero) {
                if (bound > 0) never_min = true;  // ℓ_j < ℓ_k everywhere
                continue;
            }
            extra.push_back({std::move(normal), bound});
        }
        if (never_min) continue;
        RationalPolytope region = body_.cut(extra);
        if (region.full_dimensional()) cells_.push_back({k, std::move(region)});
    }

    bool first = true;
    for (const auto& c : cells_)
        for (const auto& v : c.region.vertices()) {
            const Rational g = forms_[c.form](v);
            if (first || g > max_) max_ = g;
            first = false;
        }

    if (nonneg_) {
        for (const auto& v : body_.vertices()) {
            if ((*this)(v) < 0) {
                std::string w = "vertex (";
                for (std::size_t i = 0; i < v.size(); ++i) w += (i ? "," : "") + to_string(v[i]);
                throw InvariantViolation("concave transform G >= 0", w + ")");
            }
        }
    }
}

Rational ConcaveTransform::operator()(const RVector& x) const {
    Rational best = forms_.front()(x);
    for (const auto& f : forms_) best = std::min(best, f(x));
    return best;
}

Rational ConcaveTransform::min_value() const {
    // a concave function attains its minimum over a polytope at a vertex
    Rational best = (*this)(body_.vertices().front());
    for (const auto& v : body_.vertices()) best = std::min(best, (*this)(v));
    return best;
}

RVector ConcaveTransform::critical_values() const {
    RVector vals;
    for (const auto& c : cells_)
        for (const auto& v : c.region.vertices()) vals.push_back(forms_[c.form](v));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

ConcaveTransform ConcaveTransform::scaled_values(const Rational& lambda) const {
    if (!(lambda > 0)) fail(ErrorKind::domain, "value scaling must be positive");
    std::vector<AffineForm> f = forms_;
    for (auto& form : f) {
        for (auto& x : form.linear) x *= lambda;
        form.constant *= lambda;
    }
    return ConcaveTransform(body_, std::move(f), nonneg_);
}

Rational simplex_power_integral(const Simplex& s, const AffineForm& form, unsigned p) {
    const std::size_t n = s.size() - 1;
    // h[d] = complete homogeneous symmetric polynomial of degree d in the values seen so far
    RVector h(p + 1, Rational(0));
    h[0] = 1;
    for (const auto& v : s) {
        const Rational x = form(v);
        for (unsigned d = 1; d <= p; ++d) h[d] += x * h[d - 1];
    }
    return simplex_volume(s) * beta_constant(p, static_cast<unsigned>(n)) * h[p];
}

Rational moment_p(const ConcaveTransform& ct, unsigned p) {
    if (p == 0) fail(ErrorKind::domain, "moment order p must be positive");
    if (!ct.nonneg()) fail(ErrorKind::domain, "moment_p requires a non-negative transform");
    Rational total(0);
    for (const auto& cell : ct.cells())
        for (const auto& s : cell.region.triangulate()) total += simplex_power_integral(s, ct.forms()[cell.form], p);
    return total / ct.body().volume();
}

Rational slice_volume(const ConcaveTransform& ct, const Rational& t) {
    std::vector<Halfspace> extra;
    for (const auto& f : ct.forms()) {
        bool zero = std::all_of(f.linear.begin(), f.linear.end(), [](const Rational& x) { return x == 0; });
        if (zero) {
            if (f.constant < t) return Rational(0);
            continue;
        }
        extra.push_back({f.linear, t - f.constant});
    }
    if (extra.empty()) return ct.body().volume();
    return ct.body().cut(extra).volume();
}

PiecewisePolynomial slice_volume_function(const ConcaveTransform& ct) {
    const Rational top = ct.max_value();
    if (top <= 0) return PiecewisePolynomial::point(Rational(0), ct.body().volume());
    RVector bp{Rational(0)};
    for (const auto& c : ct.critical_values())
        if (c > 0 && c < top) bp.push_back(c);
    bp.push_back(top);

    const unsigned n = ct.body().dim();
    std::vector<Polynomial> pieces;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        std::vector<std::pair<Rational, Rational>> samples;
        const Rational step = (bp[i + 1] - bp[i]) / (n + 2);
        for (unsigned j = 1; j <= n + 1; ++j) {
            const Rational t = bp[i] + step * j;
            samples.emplace_back(t, slice_volume(ct, t));
        }
        pieces.push_back(lagrange_interpolate(samples));
    }
    return PiecewisePolynomial(std::move(bp), std::move(pieces));
}

VolumeCurve volume_curve_of(const ConcaveTransform& ct) {
    const Rational nfact(factorial(ct.body().dim()));
    const PiecewisePolynomial slices = slice_volume_function(ct);
    if (slices.pieces().empty()) return VolumeCurve::trivial(ct.body().dim(), ct.body().volume() * nfact);
    std::vector<Polynomial> pieces;
    for (const auto& piece : slices.pieces()) pieces.push_back(piece * nfact);
    return VolumeCurve(ct.body().dim(), PiecewisePolynomial(slices.breakpoints(), std::move(pieces), true));
}

Rational moment_p_layer_cake(const ConcaveTransform& ct, unsigned p) {
    if (p == 0) fail(ErrorKind::domain, "moment order p must be positive");
    const PiecewisePolynomial slices = slice_volume_function(ct);
    if (slices.pieces().empty()) return Rational(0);
    return Rational(static_cast<long>(p)) * integrate_monomial_weighted(slices, p, slices.begin(), slices.end()) /
           ct.body().volume();
}

SpectralMeasure pushforward_measure(const ConcaveTransform& ct, unsigned resolution) {
    if (resolution == 0) fail(ErrorKind::domain, "resolution must be positive");
    if (!ct.nonneg()) fail(ErrorKind::domain, "pushforward needs a non-negative transform");
    const Rational vol = ct.body().volume();
    const Rational top = ct.max_value();
    std::vector<SpectralMeasure::Atom> atoms;
    if (top == 0) {
        atoms.push_back({Rational(0), Rational(1)});
        return SpectralMeasure(std::move(atoms));
    }
    std::vector<Rational> levels(resolution + 1);
    for (unsigned i = 0; i <= resolution; ++i) levels[i] = slice_volume(ct, top * Rational(Integer(i), Integer(resolution)));
    for (unsigned i = 0; i <= resolution; ++i) {
        const Rational upper = i < resolution ? levels[i + 1] : Rational(0);
        const Rational mass = (levels[i] - upper) / vol;
        if (mass > 0) atoms.push_back({top * Rational(Integer(i), Integer(resolution)), mass});
    }
    return SpectralMeasure(std::move(atoms));
}

}  // namespace valinv
