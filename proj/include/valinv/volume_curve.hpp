#pragma once

#include "valinv/piecewise.hpp"

#include <optional>
#include <string>
#include <utility>

namespace valinv {

/// x -> vol(L - xF) on [0, tau]: nonincreasing, curve(0) = V, curve(tau) = 0,
/// and curve^{1/n} concave. A curve with tau = 0 is the trivial filtration.
class VolumeCurve {
public:
    /// Validates every invariant; throws InvariantViolation with a witness x.
    VolumeCurve(unsigned dim, PiecewisePolynomial curve);
    /// tau = 0: the trivial filtration of a pair with volume V.
    static VolumeCurve trivial(unsigned dim, const Rational& volume);

    unsigned dim() const noexcept { return dim_; }
    const Rational& volume() const noexcept { return volume_; }
    const Rational& tau() const noexcept { return tau_; }
    const PiecewisePolynomial& curve() const noexcept { return curve_; }
    bool degenerate() const noexcept { return tau_ == 0; }

    /// Same curve for the scaled pair λL: x -> λ^n curve(x/λ).
    VolumeCurve scaled(const Rational& lambda) const;

private:
    VolumeCurve() = default;
    unsigned dim_ = 0;
    Rational volume_{0};
    Rational tau_{0};
    PiecewisePolynomial curve_;
};

/// f^{n-1} = -curve'/V on (0, tau); integrates to one.
struct RadialProfile {
    unsigned dim = 0;
    PiecewisePolynomial fpow;
};

/// Refined float grid used by the concavity checks: breakpoints plus 64
/// equally spaced interior points per piece.
std::vector<double> refined_grid(const PiecewisePolynomial& f, int per_piece = 64);

/// First grid point where g fails midpoint concavity by more than tol·scale.
std::optional<double> concavity_witness(const std::vector<double>& grid, const std::vector<double>& values,
                                        double tol = 1e-12);

/// S^(p) = (p/V) ∫_0^tau x^{p-1} vol dx, exact.
Rational s_p(const VolumeCurve& c, unsigned p);
/// (1/V) ∫ x^p d(-vol), the Stieltjes form, computed from curve' independently of s_p.
Rational s_p_stieltjes(const VolumeCurve& c, unsigned p);
/// S^(p) for real p >= 1, absolute error <= max(tol, 1e-13·tau^p).
double s_p_real(const VolumeCurve& c, double p, double tol = 1e-12);
/// S^(p)^{1/p}, evaluated on the rescaled curve so large p does not overflow.
double s_p_root_real(const VolumeCurve& c, double p, double tol = 1e-13);

struct BarycenterBounds {
    double lower = 0.0;
    double upper = 0.0;
};
struct ExactBarycenterBounds {
    Rational lower{0};
    Rational upper{0};
};
/// Γ(p+1)Γ(n+1)/Γ(p+n+1)·τ^p and n/(n+p)·τ^p.
BarycenterBounds barycenter_bounds(const VolumeCurve& c, double p);
ExactBarycenterBounds barycenter_bounds_exact(const VolumeCurve& c, unsigned p);

/// H(p) = ((n+p)/n · S^(p))^{1/p}; domain error for tau = 0.
double h_stat(const VolumeCurve& c, double p, double tol = 1e-13);

/// K(s) = s ∫_0^tau x^{s-1} g^{n-1} dx with g = f/x, for s > n-1.
double k_stat(const VolumeCurve& c, double s);

/// A + log(1 - (1/V) ∫ e^{-x} vol dx) by quadrature.
double h_na_candidate(const VolumeCurve& c, double log_discrepancy, double tol = 1e-13);
/// (1/V) ∫ e^{-x} vol dx from the alternating moment series Σ (-1)^{k+1} S^(k)/k!,
/// summed exactly. terms = 0 picks enough terms for the curve's tau.
double exp_moment_series(const VolumeCurve& c, unsigned terms = 0);

RadialProfile radial_profile(const VolumeCurve& c);

/// (Γ(n+p+1)/(Γ(n+1)Γ(p+1)) · S^(p))^{1/p}, conjectured non-increasing in p.
/// Exposed for scans only; never asserted.
double beta_normalized_stat(const VolumeCurve& c, double p, double tol = 1e-13);

}  // namespace valinv
