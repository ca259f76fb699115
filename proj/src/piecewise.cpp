#include "valinv/piecewise.hpp"

#include "valinv/error.hpp"

#include <algorithm>

namespace valinv {

PiecewisePolynomial::PiecewisePolynomial(RVector breakpoints, std::vector<Polynomial> pieces, bool continuous)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)), continuous_(continuous) {
    if (breakpoints_.size() < 2) fail(ErrorKind::domain, "piecewise polynomial needs at least two breakpoints");
    if (pieces_.size() != breakpoints_.size() - 1)
        fail(ErrorKind::domain, "piece count must equal breakpoint count minus one");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i)
        if (!(breakpoints_[i - 1] < breakpoints_[i]))
            fail(ErrorKind::domain, "breakpoints must be strictly increasing");
    if (continuous_) {
        for (std::size_t i = 1; i < pieces_.size(); ++i)
            if (pieces_[i - 1](breakpoints_[i]) != pieces_[i](breakpoints_[i]))
                fail(ErrorKind::domain, "pieces disagree at breakpoint " + to_string(breakpoints_[i]));
    }
}

PiecewisePolynomial PiecewisePolynomial::point(const Rational& x0, const Rational& value) {
    PiecewisePolynomial f;
    f.breakpoints_ = {x0};
    f.point_value_ = value;
    f.continuous_ = true;
    return f;
}

std::size_t PiecewisePolynomial::locate(const Rational& x) const {
    if (x < begin() || x > end()) fail(ErrorKind::range, "x = " + to_string(x) + " outside piecewise domain");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
    return std::min(idx == 0 ? 0 : idx - 1, pieces_.empty() ? 0 : pieces_.size() - 1);
}

std::size_t PiecewisePolynomial::locate(double x) const {
    std::size_t idx = 0;
    while (idx + 1 < pieces_.size() && x >= to_double(breakpoints_[idx + 1])) ++idx;
    return idx;
}

Rational PiecewisePolynomial::operator()(const Rational& x) const {
    if (pieces_.empty()) {
        if (x != begin()) fail(ErrorKind::range, "x outside single-point domain");
        return point_value_;
    }
    return pieces_[locate(x)](x);
}

double PiecewisePolynomial::eval(double x) const {
    if (pieces_.empty()) return to_double(point_value_);
    return pieces_[locate(x)].eval(x);
}

PiecewisePolynomial PiecewisePolynomial::derivative() const {
    if (pieces_.empty()) return point(begin(), Rational(0));
    std::vector<Polynomial> d;
    d.reserve(pieces_.size());
    for (const auto& p : pieces_) d.push_back(p.derivative());
    return PiecewisePolynomial(breakpoints_, std::move(d), false);
}

PiecewisePolynomial PiecewisePolynomial::scaled(const Rational& c) const {
    if (pieces_.empty()) return point(begin(), point_value_ * c);
    std::vector<Polynomial> s;
    for (const auto& p : pieces_) s.push_back(p * c);
    return PiecewisePolynomial(breakpoints_, std::move(s), false);
}

PiecewisePolynomial PiecewisePolynomial::times_monomial(unsigned k) const {
    if (pieces_.empty()) return point(begin(), point_value_ * pow(begin(), k));
    std::vector<Polynomial> s;
    for (const auto& p : pieces_) s.push_back(p.shifted_power(k));
    return PiecewisePolynomial(breakpoints_, std::move(s), false);
}

Rational PiecewisePolynomial::integral(const Rational& a, const Rational& b) const {
    if (a > b) fail(ErrorKind::range, "integration bounds reversed");
    if (a < begin() || b > end()) fail(ErrorKind::range, "integration bounds outside domain");
    Rational total(0);
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        Rational lo = std::max(a, breakpoints_[i]);
        Rational hi = std::min(b, breakpoints_[i + 1]);
        if (!(lo < hi)) continue;
        Polynomial anti = pieces_[i].antiderivative();
        total += anti(hi) - anti(lo);
    }
    return total;
}

int PiecewisePolynomial::max_degree() const {
    int d = -1;
    for (const auto& p : pieces_) d = std::max(d, p.degree());
    return d;
}

}  // namespace valinv
