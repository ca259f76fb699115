#pragma once

#include "valinv/polynomial.hpp"

#include <vector>

namespace valinv {

/// Piecewise polynomial on [breakpoints.front(), breakpoints.back()].
/// Pieces are expressed in the global variable x (not re-centred per interval).
class PiecewisePolynomial {
public:
    PiecewisePolynomial() = default;
    /// Throws domain error unless breakpoints are strictly increasing and
    /// pieces.size() == breakpoints.size() - 1. With `continuous` set, adjacent
    /// pieces must agree exactly at interior breakpoints.
    PiecewisePolynomial(RVector breakpoints, std::vector<Polynomial> pieces, bool continuous = false);

    /// Degenerate curve on the single point {x0}: no pieces, value `value`.
    static PiecewisePolynomial point(const Rational& x0, const Rational& value);

    const RVector& breakpoints() const noexcept { return breakpoints_; }
    const std::vector<Polynomial>& pieces() const noexcept { return pieces_; }
    bool continuous() const noexcept { return continuous_; }
    const Rational& begin() const { return breakpoints_.front(); }
    const Rational& end() const { return breakpoints_.back(); }

    /// Index of the piece containing x; breakpoints belong to the piece on their right
    /// except the final one.
    std::size_t locate(const Rational& x) const;
    std::size_t locate(double x) const;

    Rational operator()(const Rational& x) const;
    double eval(double x) const;

    PiecewisePolynomial derivative() const;
    PiecewisePolynomial scaled(const Rational& c) const;
    /// f(x) -> f(x) * x^k on every piece.
    PiecewisePolynomial times_monomial(unsigned k) const;

    /// Exact integral over [a, b] (a <= b inside the domain).
    Rational integral(const Rational& a, const Rational& b) const;
    Rational integral() const { return integral(begin(), end()); }

    int max_degree() const;

private:
    RVector breakpoints_;
    std::vector<Polynomial> pieces_;
    Rational point_value_{0};
    bool continuous_ = false;
};

}  // namespace valinv
