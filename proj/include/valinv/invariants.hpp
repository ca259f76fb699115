#pragma once

#include "valinv/toric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace valinv {

/// min over the candidates of A(v)/τ(v): an upper bound for α.
Rational alpha_candidate(const std::vector<Candidate>& candidates);
Rational alpha_candidate(const ToricModel& tm, unsigned bound);

struct InvariantReport {
    unsigned dim = 0;
    std::vector<double> p_grid;
    std::vector<DeltaSearch> deltas;  // one per grid entry, all upper bounds
    Rational alpha_upper{0};
    /// Grid indices i with δ^(p_{i+1}) > δ^(p_i): flagged, never silently dropped.
    std::vector<std::size_t> monotonicity_breaks;
    /// δ^(p_max) - α at the largest grid entry.
    double alpha_gap = 0.0;
    /// (n+1)/n·α <= δ^(1) <= (n+1)·α, exact; unset when 1 is not on the grid.
    std::optional<bool> alpha_sandwich;
    /// Per candidate and grid entry: β τ^p <= S^(p) <= n/(n+p)·τ^p.
    bool brackets_hold = true;
    /// Per candidate, integer p: S^(p) >= ((n+1)/n)^p·n/(n+p)·S^(1)^p.
    bool key_monotonicity_holds = true;
    /// Named property and witness for every failed check.
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

InvariantReport delta_family(const ToricModel& tm, const std::vector<double>& p_grid, unsigned bound);

enum class Verdict { exceeds_threshold, below_threshold, borderline };
std::string to_string(Verdict v);

/// Comparison of the δ^(p)(-K) upper bound with n/(n+1)·((n+p)/n)^{1/p}.
/// "exceeds" is candidate evidence only: the search value is an upper bound.
struct KStabilityVerdict {
    double p = 1.0;
    Verdict verdict = Verdict::borderline;
    double delta_upper = 0.0;  // for L = -K
    double threshold = 0.0;
    /// L = λ·(-K) up to translation.
    Rational lambda{1};
    std::optional<Rational> delta_pow;      // δ^p, integer p
    std::optional<Rational> threshold_pow;  // threshold^p, integer p
    /// δ^(p) of projective space of the same dimension.
    double boundary_value = 0.0;
    /// h(p) = p log n - Σ_{i<n} log((p+i)/i); decided exactly for integer p.
    double h = 0.0;
    std::optional<bool> h_positive;  // n >= 2, p > 1
    RVector argmin;
};

/// Semantic error unless the polytope is proportional to the anticanonical one.
KStabilityVerdict kstability_verdict(const ToricModel& tm, double p, unsigned bound, double rel_tol = 1e-9);
KStabilityVerdict kstability_verdict(const ToricModel& tm, const std::vector<Candidate>& candidates, double p,
                                     double rel_tol = 1e-9);

/// h(p) > 0 iff n^p > Π_{i=1}^{n-1} (p+i)/i, exact for integer p.
bool h_positive_exact(unsigned n, unsigned p);
double h_function(unsigned n, double p);

/// A / (∫_0^τ p x^{p-1} vol dx)^{1/p}, unnormalized by the volume.
double delta_bar_p(const ToricModel& tm, const ToricValuation& tv, double p);
/// Its p-th power, exact for integer p.
Rational delta_bar_pow(const ToricModel& tm, const ToricValuation& tv, unsigned p);

/// δ^(p) upper bounds of the models P_t = {⟨u_0, x⟩ >= -(a_0 + t)} (first facet
/// pushed out by t), for each t on the grid. A probe only.
std::vector<DeltaSearch> continuity_scan(const ToricModel& tm, double p, unsigned bound, const RVector& t_grid);

}  // namespace valinv
