#pragma once

#include "valinv/filtration.hpp"
#include "valinv/polytope.hpp"
#include "valinv/volume_curve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace valinv {

/// Maximal cone of the normal fan: the facets through one vertex of P.
struct FanCone {
    RVector vertex;
    std::vector<std::size_t> rays;  // indices into ToricModel::rays()
    /// ⟨m, u_ρ⟩ = 1 on every ray of the cone, when solvable.
    std::optional<RVector> m_sigma;
};

/// Polarized toric variety given by its polytope P = {x : ⟨u_ρ, x⟩ >= -a_ρ}.
class ToricModel {
public:
    static ToricModel from_polytope(RationalPolytope p);
    /// p2, p1xp1, p2-anticanonical, hirzebruch-<a>, pn:<n>.
    static ToricModel builtin(const std::string& name);

    const RationalPolytope& polytope() const noexcept { return p_; }
    unsigned dim() const noexcept { return p_.dim(); }
    /// Inward primitive facet normals u_ρ.
    const std::vector<RVector>& rays() const noexcept { return rays_; }
    /// a_ρ.
    const RVector& offsets() const noexcept { return offsets_; }
    const std::vector<FanCone>& cones() const noexcept { return cones_; }
    bool q_gorenstein() const noexcept { return q_gorenstein_; }
    /// V = n!·vol(P).
    Rational volume() const;

    ToricModel scaled(const Rational& lambda) const;
    /// {⟨u_ρ, x⟩ >= -1}; unsupported unless it has the same normal fan.
    ToricModel anticanonical() const;
    /// λ with P a translate of λ·P_{-K}, if P is proportional to -K.
    std::optional<Rational> anticanonical_ratio() const;

private:
    RationalPolytope p_;
    std::vector<RVector> rays_;
    RVector offsets_;
    std::vector<FanCone> cones_;
    bool q_gorenstein_ = true;
};

/// g_v(u) = ⟨u, v⟩ + offset, non-negative on P with minimum 0.
struct ToricValuation {
    RVector v;
    Rational offset{0};
};

/// Checks that v is a nonzero primitive integer vector and fixes the offset.
ToricValuation make_valuation(const ToricModel& tm, const RVector& v);

/// x -> n!·vol{u ∈ P : g_v(u) >= x}.
VolumeCurve volume_curve_of(const ToricModel& tm, const ToricValuation& tv);
/// A(v) = ⟨m_σ, v⟩ for a cone σ containing v.
Rational log_discrepancy(const ToricModel& tm, const ToricValuation& tv);
/// Jumps ⟨u, v⟩ + m·offset over the lattice points u of mP, with the
/// coordinate flag of the monomial basis when requested.
FlagFiltration section_filtration(const ToricModel& tm, const ToricValuation& tv, unsigned m, bool with_flag = false);

struct Candidate {
    ToricValuation valuation;
    Rational log_discrepancy;
    Rational tau;
    VolumeCurve curve;
};

/// Every primitive v with ‖v‖_∞ <= bound, in lexicographic order, with the
/// data the searches need. Computed once per (model, bound).
std::vector<Candidate> candidate_table(const ToricModel& tm, unsigned bound);

struct DeltaRow {
    RVector v;
    Rational log_discrepancy;
    double s_p = 0.0;
    std::optional<Rational> s_p_exact;  // integer p
    double ratio = 0.0;                 // A / S^(p)^{1/p}
};

/// Minimum of A(v)/S^(p)(v)^{1/p} over the candidates: an upper bound for δ^(p).
struct DeltaSearch {
    double p = 1.0;
    double value = 0.0;
    /// value^p as an exact rational, for integer p.
    std::optional<Rational> value_pow;
    RVector argmin;
    std::vector<DeltaRow> table;
    static constexpr bool upper_bound = true;
};

DeltaSearch delta_p_search(const std::vector<Candidate>& candidates, double p);
DeltaSearch delta_p_search(const ToricModel& tm, double p, unsigned bound);

}  // namespace valinv
