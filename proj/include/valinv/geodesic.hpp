#pragma once

#include "valinv/filtration.hpp"
#include "valinv/okounkov.hpp"
#include "valinv/toric.hpp"

#include <vector>

namespace valinv {

/// Concave, nonincreasing, piecewise-linear ψ on [0, λ_max] with ψ(0) = 0 and
/// ψ = -∞ beyond λ_max. Stored canonically: collinear breakpoints are dropped.
class TestCurve1D {
public:
    /// Breakpoints 0 = λ_0 < ... < λ_k = λ_max with values ψ_i.
    TestCurve1D(RVector lambdas, RVector values);
    /// ψ = 0 on [0, c].
    static TestCurve1D shifted_trivial(const Rational& c);

    const RVector& lambdas() const noexcept { return lambdas_; }
    const RVector& values() const noexcept { return values_; }
    const Rational& lambda_max() const { return lambdas_.back(); }
    /// Slopes of the pieces, nonincreasing and <= 0.
    RVector slopes() const;
    Rational operator()(const Rational& lambda) const;

    friend bool operator==(const TestCurve1D&, const TestCurve1D&) = default;

private:
    RVector lambdas_;
    RVector values_;
};

/// Convex, nondecreasing, piecewise-linear φ on [0, ∞) with φ(0) = 0: slope
/// slopes[i] on [breaks[i-1], breaks[i]] (breaks[-1] = 0, last piece unbounded).
class GeodesicRay1D {
public:
    GeodesicRay1D(RVector breaks, RVector slopes);

    const RVector& breaks() const noexcept { return breaks_; }
    const RVector& slopes() const noexcept { return slopes_; }
    Rational operator()(const Rational& t) const;
    /// φ(t) = ψ_i + λ_i t on piece i.
    Rational intercept(std::size_t piece) const;

    friend bool operator==(const GeodesicRay1D&, const GeodesicRay1D&) = default;

private:
    RVector breaks_;
    RVector slopes_;
};

/// φ(t) = max_λ (ψ(λ) + tλ), by the upper envelope of the lines ψ_i + λ_i t.
GeodesicRay1D legendre(const TestCurve1D& tc);
/// ψ(λ) = inf_{t >= 0} (φ(t) - tλ) on [0, min(λ_max, last slope)].
TestCurve1D inverse_legendre(const GeodesicRay1D& gr, const Rational& lambda_max);
/// 0 <= φ(t) <= T·t for all t >= 0, decided exactly.
bool growth_bound_holds(const GeodesicRay1D& gr, const Rational& T);

/// (∫ x^p dμ)^{1/p}.
double dp_speed(const SpectralMeasure& mu, double p);
/// moment_p(G)^{1/p} = S^(p)^{1/p} of the filtration G encodes.
double dp_speed(const ConcaveTransform& ct, double p);
/// (1/d) Σ δ_{a_j/m}.
SpectralMeasure jumping_measure(const FlagFiltration& f);

struct MomentIdentityRow {
    unsigned m = 0;
    double quantized = 0.0;   // S_m^(p)^{1/p}
    double continuous = 0.0;  // dp_speed of the transform
    double gap = 0.0;
};

struct MomentIdentityReport {
    double p = 1.0;
    std::vector<MomentIdentityRow> rows;  // m = 1, 2, 4, ..., m_max
    /// gaps nonincreasing over the table and gap(m_max) <= (n+1)·τ/m_max.
    bool converging = false;
    /// ((n+p)/n)^{1/p}·dp_speed(p) on p = 1..8.
    std::vector<double> normalized_speeds;
    bool normalized_nondecreasing = false;
};

MomentIdentityReport verify_moment_identity(const ToricModel& tm, const ToricValuation& tv, double p, unsigned m_max);

/// ((n+p)/n)^{1/p}·dp_speed(μ, p) on the grid. Exploratory: monotone for
/// divisorial inputs, and not in general (shifted trivial rays).
std::vector<double> normalized_speed_profile(const SpectralMeasure& mu, unsigned n, const std::vector<double>& p_grid);

}  // namespace valinv
