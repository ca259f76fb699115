#pragma once

#include "valinv/piecewise.hpp"

#include <cstddef>
#include <functional>

namespace valinv {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // sum of |K15 - G7| over the final partition
    std::size_t evaluations = 0;
};

inline constexpr std::size_t kQuadratureBudget = 1'000'000;

/// Globally adaptive 7/15-point Gauss-Kronrod with bisection of the worst
/// interval. Throws ErrorKind::accuracy if `tol` is not met within `budget`
/// integrand evaluations.
QuadratureResult adaptive_gauss_kronrod(const std::function<double(double)>& f, double a, double b, double tol,
                                        std::size_t budget = kQuadratureBudget);

/// Exact ∫_a^b x^{p-1} f(x) dx.
Rational integrate_monomial_weighted(const PiecewisePolynomial& f, unsigned p, const Rational& a,
                                     const Rational& b);

/// ∫_a^b x^{p-1} f(x) dx for real p >= 1, absolute error <= tol.
double integrate_real_power(const PiecewisePolynomial& f, double p, const Rational& a, const Rational& b,
                            double tol);

}  // namespace valinv
