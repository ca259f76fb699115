#include "valinv/certified.hpp"

#include "valinv/error.hpp"

namespace valinv {

Enclosure::Enclosure() {
    mpfr_init2(lo_, kPrecision);
    mpfr_init2(hi_, kPrecision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(const Rational& q) : Enclosure() {
    mpfr_set_q(lo_, q.backend().data(), MPFR_RNDD);
    mpfr_set_q(hi_, q.backend().data(), MPFR_RNDU);
}

Enclosure::Enclosure(const Enclosure& o) : Enclosure() {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Enclosure& Enclosure::operator=(const Enclosure& o) {
    if (this != &o) {
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Enclosure::~Enclosure() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Enclosure Enclosure::power(const Rational& base, double exponent) {
    if (base < 0 || !(exponent > 0)) fail(ErrorKind::domain, "Enclosure::power needs base >= 0, exponent > 0");
    Enclosure b(base);
    Enclosure r;
    mpfr_t e;
    mpfr_init2(e, kPrecision);
    mpfr_set_d(e, exponent, MPFR_RNDN);  // exact: doubles are representable at this precision
    // x -> x^e is nondecreasing on [0, inf) for e > 0
    mpfr_pow(r.lo_, b.lo_, e, MPFR_RNDD);
    mpfr_pow(r.hi_, b.hi_, e, MPFR_RNDU);
    mpfr_clear(e);
    return r;
}

Enclosure& Enclosure::operator+=(const Enclosure& o) {
    mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Enclosure& Enclosure::operator-=(const Enclosure& o) {
    mpfr_t nlo;
    mpfr_init2(nlo, kPrecision);
    mpfr_sub(nlo, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(hi_, hi_, o.lo_, MPFR_RNDU);
    mpfr_set(lo_, nlo, MPFR_RNDD);
    mpfr_clear(nlo);
    return *this;
}

Enclosure& Enclosure::mul_nonneg(const Enclosure& o) {
    if (mpfr_sgn(lo_) < 0 || mpfr_sgn(o.lo_) < 0) fail(ErrorKind::domain, "mul_nonneg on a negative enclosure");
    mpfr_mul(lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(hi_, hi_, o.hi_, MPFR_RNDU);
    return *this;
}

double Enclosure::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Enclosure::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Enclosure::width() const {
    mpfr_t w;
    mpfr_init2(w, kPrecision);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

bool certainly_ge(const Enclosure& a, const Enclosure& b) { return mpfr_cmp(a.lo_, b.hi_) >= 0; }
bool possibly_ge(const Enclosure& a, const Enclosure& b) { return mpfr_cmp(a.hi_, b.lo_) >= 0; }

}  // namespace valinv
