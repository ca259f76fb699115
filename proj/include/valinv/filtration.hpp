#pragma once

#include "valinv/certified.hpp"
#include "valinv/linalg.hpp"
#include "valinv/polytope.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace valinv {

/// Decreasing chain of proper nonzero subspaces of Q^d, each given by a row basis.
/// members[k] is F^λ for c_{k+1} < λ <= c_{k+2}, where c_1 < c_2 < ... are the
/// distinct jumping numbers; F^λ is everything for λ <= c_1 and zero above the last.
struct Flag {
    unsigned ambient = 0;
    std::vector<RMatrix> members;
};

/// A filtration of R_m recorded through its jumping numbers
/// 0 <= a_1 <= ... <= a_d, optionally realized by an explicit flag.
class FlagFiltration {
public:
    /// Sorts the jumps; checks them against the flag when one is given.
    FlagFiltration(unsigned level, RVector jumps, std::optional<Flag> flag = std::nullopt);

    unsigned level() const noexcept { return level_; }
    std::size_t dim() const noexcept { return jumps_.size(); }
    const RVector& jumps() const noexcept { return jumps_; }
    const std::optional<Flag>& flag() const noexcept { return flag_; }
    /// c_1 < c_2 < ... < c_r.
    RVector distinct_jumps() const;
    /// ord(s) = max{λ : s ∈ F^λ} for s != 0, by rank tests down the flag.
    Rational order_of(const RVector& s) const;

private:
    unsigned level_;
    RVector jumps_;
    std::optional<Flag> flag_;
};

/// (1/d) Σ (a_j/m)^p.
Rational s_m_p(const FlagFiltration& f, unsigned p);
/// Same for real p >= 1, as a certified enclosure.
Enclosure s_m_p_enclosure(const FlagFiltration& f, double p);
double s_m_p_real(const FlagFiltration& f, double p);
/// a_d / m; zero for an empty filtration.
Rational t_m(const FlagFiltration& f);
/// The induced ℕ-filtration: jumps a -> floor(a), flag unchanged.
FlagFiltration round_to_integer_filtration(const FlagFiltration& f);

/// Basis b_1..b_d such that every flag member is spanned by a suffix of it.
/// Deterministic: members are reduced to row echelon form and extended from the
/// deepest member outwards, then by standard basis vectors.
RMatrix compatible_basis(const Flag& flag);
/// (1/d) Σ (ord(b_i)/m)^p for a basis (rows) of Q^d.
Rational basis_value(const FlagFiltration& f, const RMatrix& basis, unsigned p);
/// Max of basis_value over `samples` random bases with entries in {-3..3}.
Rational sup_over_bases_oracle(const FlagFiltration& f, unsigned p, unsigned samples, std::uint64_t seed);
/// (1/d) Σ_k (c_k/m)^p (dim W_{k-1} - dim W_k), multiplicities read off the flag
/// by rank computations rather than from the jump list.
Rational telescoped_s_m_p(const FlagFiltration& f, unsigned p);

struct SandwichCheck {
    bool upper = false;      // S(F) >= S(F_ℕ)
    bool lower = false;      // S(F_ℕ) >= S(F) - correction
    bool certified = false;  // decided exactly or by disjoint enclosures
};
/// The rounding sandwich with correction 1/m (p = 1), (p/m^{p-1}) S^(1)
/// (1 < p < 2) or (p/m) S^(p-1) (p >= 2).
SandwichCheck rounding_sandwich(const FlagFiltration& f, double p);

/// w_m(u) = <u, v> - m·min_P <., v> on the lattice points of mP, floored when
/// integer weights are requested.
class MonomialGradedFiltration {
public:
    MonomialGradedFiltration(RationalPolytope polytope, RVector v);

    const RationalPolytope& polytope() const noexcept { return polytope_; }
    const RVector& direction() const noexcept { return v_; }
    /// Lattice points of kP in lexicographic order.
    std::vector<std::vector<Integer>> lattice_points(unsigned k) const;
    Rational weight(unsigned k, const std::vector<Integer>& u) const;
    /// The level-k filtration in the monomial basis, with its coordinate flag.
    FlagFiltration level(unsigned k, bool with_flag = false) const;

private:
    RationalPolytope polytope_;
    RVector v_;
    Rational min_;
};

struct GeneratedWeights {
    unsigned level = 0;
    std::vector<std::vector<Integer>> points;
    RVector weights;
    /// false where no decomposition with at least one level-m factor exists
    std::vector<bool> decomposed;

    FlagFiltration filtration() const;
};

/// Level-k weights of the finitely generated filtration built from the
/// (floored) level-m weights of base: products of level-m pieces times an
/// unfiltered remainder. Dynamic programming over lattice points.
GeneratedWeights generated_filtration(const MonomialGradedFiltration& base, unsigned m, unsigned k);

}  // namespace valinv
