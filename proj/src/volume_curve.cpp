#include "valinv/volume_curve.hpp"

#include "valinv/error.hpp"
#include "valinv/quadrature.hpp"
#include "valinv/special.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace valinv {

namespace {

std::string witness_at(double x) {
    std::ostringstream os;
    os.precision(17);
    os << "x=" << x;
    return os.str();
}

constexpr int kGridPerPiece = 64;

// Grid values x -> f(x)^{1/k}, with f evaluated exactly so that the root of a
// nearly vanishing value does not amplify cancellation.
std::vector<double> exact_root_values(const PiecewisePolynomial& f, int per_piece, unsigned k) {
    std::vector<double> out;
    const auto& bp = f.breakpoints();
    auto push = [&](const Rational& x) {
        const Rational v = f(x);
        out.push_back(v > 0 ? std::pow(to_double(v), 1.0 / k) : 0.0);
    };
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const Rational step = (bp[i + 1] - bp[i]) / per_piece;
        for (int j = 0; j < per_piece; ++j) push(bp[i] + step * j);
    }
    push(bp.back());
    return out;
}

}  // namespace

std::vector<double> refined_grid(const PiecewisePolynomial& f, int per_piece) {
    std::vector<double> grid;
    const auto& bp = f.breakpoints();
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const double a = to_double(bp[i]), b = to_double(bp[i + 1]);
        for (int k = 0; k < per_piece; ++k) grid.push_back(a + (b - a) * k / per_piece);
    }
    grid.push_back(to_double(bp.back()));
    return grid;
}

std::optional<double> concavity_witness(const std::vector<double>& grid, const std::vector<double>& values,
                                        double tol) {
    double scale = 1.0;
    for (double v : values) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double x0 = grid[i - 1], x1 = grid[i], x2 = grid[i + 1];
        if (!(x0 < x1 && x1 < x2)) continue;
        const double w = (x1 - x0) / (x2 - x0);
        const double chord = (1.0 - w) * values[i - 1] + w * values[i + 1];
        if (values[i] < chord - tol * scale) return x1;
    }
    return std::nullopt;
}

VolumeCurve::VolumeCurve(unsigned dim, PiecewisePolynomial curve) : dim_(dim), curve_(std::move(curve)) {
    if (dim_ == 0) fail(ErrorKind::domain, "volume curve dimension must be positive");
    if (curve_.breakpoints().empty()) fail(ErrorKind::domain, "empty volume curve");
    if (curve_.begin() != 0) throw InvariantViolation("VolumeCurve domain starts at 0", "x=" + to_string(curve_.begin()));
    volume_ = curve_(Rational(0));
    tau_ = curve_.end();
    if (!(volume_ > 0)) throw InvariantViolation("VolumeCurve curve(0) = V > 0", "x=0");
    if (curve_.pieces().empty()) return;
    if (curve_(tau_) != 0) throw InvariantViolation("VolumeCurve curve(tau) = 0", "x=" + to_string(tau_));

    const auto& bp = curve_.breakpoints();
    const auto& pieces = curve_.pieces();
    for (std::size_t i = 1; i < pieces.size(); ++i)
        if (pieces[i - 1](bp[i]) != pieces[i](bp[i]))
            throw InvariantViolation("VolumeCurve continuity", "x=" + to_string(bp[i]));

    // Nonincreasing: exact derivative sign on a rational grid of each piece.
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Polynomial d = pieces[i].derivative();
        const Rational step = (bp[i + 1] - bp[i]) / kGridPerPiece;
        for (int k = 0; k <= kGridPerPiece; ++k) {
            const Rational x = bp[i] + step * k;
            if (d(x) > 0) throw InvariantViolation("VolumeCurve nonincreasing", "x=" + to_string(x));
        }
    }

    const std::vector<double> grid = refined_grid(curve_, kGridPerPiece);
    const std::vector<double> root = exact_root_values(curve_, kGridPerPiece, dim_);
    if (auto x = concavity_witness(grid, root))
        throw InvariantViolation("VolumeCurve concavity of vol^(1/n)", witness_at(*x));
}

VolumeCurve VolumeCurve::trivial(unsigned dim, const Rational& volume) {
    if (dim == 0) fail(ErrorKind::domain, "volume curve dimension must be positive");
    if (!(volume > 0)) fail(ErrorKind::domain, "volume must be positive");
    VolumeCurve c;
    c.dim_ = dim;
    c.volume_ = volume;
    c.tau_ = 0;
    c.curve_ = PiecewisePolynomial::point(Rational(0), volume);
    return c;
}

VolumeCurve VolumeCurve::scaled(const Rational& lambda) const {
    if (!(lambda > 0)) fail(ErrorKind::domain, "scaling factor must be positive");
    const Rational lam_n = pow(lambda, dim_);
    if (degenerate()) return trivial(dim_, volume_ * lam_n);
    RVector bp;
    for (const auto& b : curve_.breakpoints()) bp.push_back(b * lambda);
    std::vector<Polynomial> pieces;
    for (const auto& p : curve_.pieces()) pieces.push_back(p.compose_affine(Rational(0), Rational(1) / lambda) * lam_n);
    return VolumeCurve(dim_, PiecewisePolynomial(std::move(bp), std::move(pieces), true));
}

Rational s_p(const VolumeCurve& c, unsigned p) {
    if (p == 0) fail(ErrorKind::domain, "moment order p must be positive");
    if (c.degenerate()) return Rational(0);
    return Rational(static_cast<long>(p)) / c.volume() *
           integrate_monomial_weighted(c.curve(), p, Rational(0), c.tau());
}

Rational s_p_stieltjes(const VolumeCurve& c, unsigned p) {
    if (p == 0) fail(ErrorKind::domain, "moment order p must be positive");
    if (c.degenerate()) return Rational(0);
    const PiecewisePolynomial density = c.curve().derivative().scaled(Rational(-1) / c.volume());
    return density.times_monomial(p).integral();
}

namespace {

// y = x / tau maps the curve onto [0, 1] with values in [0, 1]
PiecewisePolynomial normalized_curve(const VolumeCurve& c) {
    RVector bp;
    for (const auto& b : c.curve().breakpoints()) bp.push_back(b / c.tau());
    std::vector<Polynomial> pieces;
    for (const auto& piece : c.curve().pieces())
        pieces.push_back(piece.compose_affine(Rational(0), c.tau()) * (Rational(1) / c.volume()));
    return PiecewisePolynomial(std::move(bp), std::move(pieces));
}

}  // namespace

double s_p_real(const VolumeCurve& c, double p, double tol) {
    if (!(p >= 1.0)) fail(ErrorKind::domain, "real moment order must satisfy p >= 1");
    if (c.degenerate()) return 0.0;
    // S = tau^p · p ∫_0^1 y^{p-1} vol(tau y)/V dy; double precision caps the
    // attainable accuracy at about 1e-13·tau^p
    const double tp = std::pow(to_double(c.tau()), p);
    const double jtol = std::max(tol / tp, 1e-13) / p;
    return tp * p * integrate_real_power(normalized_curve(c), p, Rational(0), Rational(1), jtol);
}

double s_p_root_real(const VolumeCurve& c, double p, double tol) {
    if (!(p >= 1.0)) fail(ErrorKind::domain, "real moment order must satisfy p >= 1");
    if (c.degenerate()) return 0.0;
    const double j = integrate_real_power(normalized_curve(c), p, Rational(0), Rational(1), tol);
    return to_double(c.tau()) * std::pow(p * j, 1.0 / p);
}

BarycenterBounds barycenter_bounds(const VolumeCurve& c, double p) {
    if (!(p >= 1.0)) fail(ErrorKind::domain, "real moment order must satisfy p >= 1");
    const double n = c.dim();
    const double tp = std::pow(to_double(c.tau()), p);
    return {beta_constant_real(p, n) * tp, n / (n + p) * tp};
}

ExactBarycenterBounds barycenter_bounds_exact(const VolumeCurve& c, unsigned p) {
    if (p == 0) fail(ErrorKind::domain, "moment order p must be positive");
    const Rational tp = pow(c.tau(), p);
    return {beta_constant(p, c.dim()) * tp, Rational(Integer(c.dim()), Integer(c.dim() + p)) * tp};
}

double h_stat(const VolumeCurve& c, double p, double tol) {
    if (c.degenerate()) fail(ErrorKind::domain, "H(p) undefined for tau = 0");
    const double n = c.dim();
    return std::pow((n + p) / n, 1.0 / p) * s_p_root_real(c, p, tol);
}

double k_stat(const VolumeCurve& c, double s) {
    const unsigned n = c.dim();
    if (!(s > static_cast<double>(n) - 1.0)) fail(ErrorKind::domain, "K(s) requires s > n - 1");
    if (c.degenerate()) fail(ErrorKind::domain, "K(s) undefined for tau = 0");
    if (n == 1) return std::pow(to_double(c.tau()), s);

    // g^{n-1} = fpow / x^{n-1}, so K(s) = s ∫ x^{s-n} fpow(x) dx; each monomial
    // x^{s-n+k} has exponent > -1 when s > n-1, integrated in closed form.
    const RadialProfile prof = radial_profile(c);
    const auto& bp = prof.fpow.breakpoints();
    double total = 0.0;
    for (std::size_t i = 0; i < prof.fpow.pieces().size(); ++i) {
        const double a = to_double(bp[i]), b = to_double(bp[i + 1]);
        const auto& coeffs = prof.fpow.pieces()[i].coeffs();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] == 0) continue;
            const double e = s - n + static_cast<double>(k) + 1.0;
            const double lo = a > 0 ? std::pow(a, e) : 0.0;
            total += to_double(coeffs[k]) * (std::pow(b, e) - lo) / e;
        }
    }
    return s * total;
}

double h_na_candidate(const VolumeCurve& c, double log_discrepancy, double tol) {
    if (c.degenerate()) return log_discrepancy;
    const auto& bp = c.curve().breakpoints();
    double integral = 0.0;
    const double share = tol / static_cast<double>(c.curve().pieces().size());
    for (std::size_t i = 0; i < c.curve().pieces().size(); ++i) {
        const Polynomial& piece = c.curve().pieces()[i];
        auto f = [&piece](double x) { return std::exp(-x) * piece.eval(x); };
        integral += adaptive_gauss_kronrod(f, to_double(bp[i]), to_double(bp[i + 1]), share).value;
    }
    const double arg = 1.0 - integral / to_double(c.volume());
    if (!(arg > 0)) throw InvariantViolation("H^NA log argument positive", "1 - (1/V)∫e^{-x}vol = " + std::to_string(arg));
    return log_discrepancy + std::log(arg);
}

double exp_moment_series(const VolumeCurve& c, unsigned terms) {
    if (c.degenerate()) return 0.0;
    // exact partial sums; the tail after k terms is below tau^{k+1}/(k+1)!
    if (terms == 0) terms = 40 + 3 * static_cast<unsigned>(to_double(c.tau()) + 1.0);
    Rational sum(0);
    Rational kfact(1);
    for (unsigned k = 1; k <= terms; ++k) {
        kfact *= k;
        const Rational term = s_p(c, k) / kfact;
        if (k % 2 == 1) sum += term;
        else sum -= term;
    }
    return to_double(sum);
}

RadialProfile radial_profile(const VolumeCurve& c) {
    if (c.degenerate()) fail(ErrorKind::domain, "radial profile undefined for tau = 0");
    RadialProfile prof;
    prof.dim = c.dim();
    prof.fpow = c.curve().derivative().scaled(Rational(-1) / c.volume());

    const auto& bp = prof.fpow.breakpoints();
    for (std::size_t i = 0; i < prof.fpow.pieces().size(); ++i) {
        const Rational step = (bp[i + 1] - bp[i]) / kGridPerPiece;
        for (int k = 0; k <= kGridPerPiece; ++k) {
            const Rational x = bp[i] + step * k;
            if (prof.fpow.pieces()[i](x) < 0) throw InvariantViolation("radial profile f^{n-1} >= 0", "x=" + to_string(x));
        }
    }
    if (prof.fpow.integral() != 1) throw InvariantViolation("radial profile normalization", "∫f^{n-1} = " + to_string(prof.fpow.integral()));

    if (c.dim() >= 2) {
        const std::vector<double> grid = refined_grid(prof.fpow, kGridPerPiece);
        const std::vector<double> f = exact_root_values(prof.fpow, kGridPerPiece, c.dim() - 1);
        if (auto x = concavity_witness(grid, f, 1e-9)) throw InvariantViolation("radial profile f concave", witness_at(*x));
    }
    return prof;
}

double beta_normalized_stat(const VolumeCurve& c, double p, double tol) {
    if (c.degenerate()) fail(ErrorKind::domain, "statistic undefined for tau = 0");
    const double n = c.dim();
    return std::pow(1.0 / beta_constant_real(p, n), 1.0 / p) * s_p_root_real(c, p, tol);
}

}  // namespace valinv
