#pragma once

#include "valinv/rational.hpp"

#include <mpfr.h>

namespace valinv {

/// Closed interval [lo, hi] with MPFR endpoints rounded outward, used to
/// decide inequalities between sums of irrational powers of rationals.
class Enclosure {
public:
    static constexpr mpfr_prec_t kPrecision = 256;

    Enclosure();
    explicit Enclosure(const Rational& q);
    Enclosure(const Enclosure& o);
    Enclosure& operator=(const Enclosure& o);
    ~Enclosure();

    /// base^exponent for base >= 0, exponent > 0.
    static Enclosure power(const Rational& base, double exponent);

    Enclosure& operator+=(const Enclosure& o);
    Enclosure& operator-=(const Enclosure& o);
    /// Multiplication by an enclosure of non-negative numbers.
    Enclosure& mul_nonneg(const Enclosure& o);

    friend Enclosure operator+(Enclosure a, const Enclosure& b) { return a += b; }
    friend Enclosure operator-(Enclosure a, const Enclosure& b) { return a -= b; }

    double lower() const;
    double upper() const;
    double width() const;

    /// Certainly a >= b (every point of a dominates every point of b).
    friend bool certainly_ge(const Enclosure& a, const Enclosure& b);
    friend bool possibly_ge(const Enclosure& a, const Enclosure& b);

private:
    mpfr_t lo_, hi_;
};

}  // namespace valinv
