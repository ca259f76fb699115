#include "valinv/polynomial.hpp"

#include "valinv/error.hpp"

namespace valinv {

Polynomial::Polynomial(RVector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(unsigned k, const Rational& c) {
    RVector v(k + 1, Rational(0));
    v[k] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::affine_power(const Rational& a, const Rational& b, unsigned k) {
    Polynomial result = constant(Rational(1));
    const Polynomial base{a, b};
    for (unsigned i = 0; i < k; ++i) result = result * base;
    return result;
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    RVector d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
    if (coeffs_.empty()) return {};
    RVector a(coeffs_.size() + 1, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) a[k + 1] = coeffs_[k] / static_cast<long>(k + 1);
    return Polynomial(std::move(a));
}

Polynomial Polynomial::shifted_power(unsigned k) const {
    if (coeffs_.empty()) return {};
    RVector v(k, Rational(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
    Polynomial result;
    const Polynomial inner{a, b};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) result = result * inner + constant(*it);
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RVector v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

Polynomial lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points) {
    Polynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Polynomial basis = Polynomial::constant(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            if (points[j].first == points[i].first) fail(ErrorKind::domain, "interpolation nodes must be distinct");
            basis = basis * Polynomial{-points[j].first, Rational(1)};
            denom *= points[i].first - points[j].first;
        }
        result += basis * (points[i].second / denom);
    }
    return result;
}

}  // namespace valinv
