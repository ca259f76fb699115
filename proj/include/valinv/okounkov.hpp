#pragma once

#include "valinv/piecewise.hpp"
#include "valinv/polytope.hpp"
#include "valinv/volume_curve.hpp"

#include <vector>

namespace valinv {

struct AffineForm {
    RVector linear;
    Rational constant{0};

    Rational operator()(const RVector& x) const { return dot(linear, x) + constant; }
    friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// Finite atomic probability measure on [0, inf).
class SpectralMeasure {
public:
    struct Atom {
        Rational location;
        Rational mass;
    };

    /// Merges equal locations and sorts; throws unless masses are positive,
    /// locations non-negative and the total mass is exactly one.
    explicit SpectralMeasure(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    Rational moment(unsigned p) const;
    double moment_real(double p) const;
    const Rational& max_support() const { return atoms_.back().location; }

private:
    std::vector<Atom> atoms_;
};

/// G = min of affine forms on a body; the concave transform of a filtration
/// read on its Okounkov body.
class ConcaveTransform {
public:
    ConcaveTransform(RationalPolytope body, std::vector<AffineForm> forms, bool nonneg = true);

    const RationalPolytope& body() const noexcept { return body_; }
    const std::vector<AffineForm>& forms() const noexcept { return forms_; }
    bool nonneg() const noexcept { return nonneg_; }

    Rational operator()(const RVector& x) const;
    /// T = max_Δ G.
    const Rational& max_value() const noexcept { return max_; }
    Rational min_value() const;

    /// Full-dimensional cells {x ∈ Δ : form k attains the min}, with the index of k.
    struct Cell {
        std::size_t form;
        RationalPolytope region;
    };
    const std::vector<Cell>& cells() const noexcept { return cells_; }

    /// Values of G at all cell vertices, sorted and deduplicated.
    RVector critical_values() const;

    ConcaveTransform scaled_values(const Rational& lambda) const;

private:
    RationalPolytope body_;
    std::vector<AffineForm> forms_;
    bool nonneg_;
    std::vector<Cell> cells_;
    Rational max_{0};
};

/// ∫_S ℓ^p over a simplex, via the complete homogeneous symmetric polynomial
/// of the vertex values: vol(S) · p! n!/(p+n)! · h_p(ℓ(v_0), ..., ℓ(v_n)).
Rational simplex_power_integral(const Simplex& s, const AffineForm& form, unsigned p);

/// (1/vol Δ) ∫_Δ G^p dρ, exact.
Rational moment_p(const ConcaveTransform& ct, unsigned p);

/// vol{x ∈ Δ : G(x) >= t}.
Rational slice_volume(const ConcaveTransform& ct, const Rational& t);

/// t -> slice_volume(t) on [0, T] as an exact piecewise polynomial of degree
/// <= n, recovered by interpolation between consecutive critical values.
PiecewisePolynomial slice_volume_function(const ConcaveTransform& ct);

/// x -> n!·vol{G >= x}: the volume curve of the filtration the transform encodes.
VolumeCurve volume_curve_of(const ConcaveTransform& ct);

/// (1/vol Δ) ∫_0^T p t^{p-1} vol(Δ^t) dt: layer-cake route to moment_p.
Rational moment_p_layer_cake(const ConcaveTransform& ct, unsigned p);

/// G_*(ρ / vol Δ) discretized on the grid T·i/resolution; mass of
/// {T·i/r <= G < T·(i+1)/r} is placed at T·i/r.
SpectralMeasure pushforward_measure(const ConcaveTransform& ct, unsigned resolution);

}  // namespace valinv
