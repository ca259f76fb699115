#pragma once

#include "valinv/rational.hpp"

#include <span>
#include <utility>
#include <vector>

namespace valinv {

/// Dense univariate polynomial over Q, coefficient of x^k at index k.
/// Trailing zeros are trimmed so degree() is exact; the zero polynomial has
/// no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RVector coeffs);
    Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(RVector(coeffs)) {}

    static Polynomial constant(const Rational& c) { return Polynomial(RVector{c}); }
    static Polynomial monomial(unsigned k, const Rational& c = Rational(1));
    /// (a + b x)^k, expanded.
    static Polynomial affine_power(const Rational& a, const Rational& b, unsigned k);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const RVector& coeffs() const noexcept { return coeffs_; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    Rational operator()(const Rational& x) const;
    double eval(double x) const;

    Polynomial derivative() const;
    /// Antiderivative vanishing at zero.
    Polynomial antiderivative() const;
    Polynomial shifted_power(unsigned k) const;  // x^k * p(x)
    /// p(a + b x).
    Polynomial compose_affine(const Rational& a, const Rational& b) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(Polynomial a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    RVector coeffs_;
};

/// Unique polynomial of degree < points.size() through the given (x, y) pairs.
Polynomial lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points);

}  // namespace valinv
