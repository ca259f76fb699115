#include "valinv/rational.hpp"

#include "valinv/error.hpp"

#include <algorithm>
#include <cctype>

namespace valinv {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) fail(ErrorKind::input, "not a rational number: '" + std::string(whole) + "'");
    std::string digits(s);
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    Integer value{digits};
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) fail(ErrorKind::input, "bad denominator in '" + std::string(text) + "'");
        std::string den_digits(den_text);
        den_digits.erase(0, std::min(den_digits.find_first_not_of('0'), den_digits.size() - 1));
        Integer den{den_digits};
        if (den == 0) fail(ErrorKind::input, "zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot_pos = text.find('.'); dot_pos != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot_pos);
        std::string_view frac_part = text.substr(dot_pos + 1);
        bool negative = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
            (int_part.empty() && frac_part.empty()))
            fail(ErrorKind::input, "not a rational number: '" + std::string(text) + "'");
        std::string digits = std::string(int_part) + std::string(frac_part);
        // a leading zero would make the string constructor read octal
        digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
        Integer num{digits.empty() ? std::string("0") : digits};
        Integer den = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac_part.size()));
        Rational q(num, den);
        return negative ? Rational(-q) : q;
    }
    return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        exponent >>= 1u;
        if (exponent) b *= b;
    }
    return result;
}

Integer floor(const Rational& q) {
    Integer num = numerator(q), den = denominator(q);
    Integer quot = num / den;  // truncates toward zero
    if (num < 0 && quot * den != num) quot -= 1;
    return quot;
}

Integer ceil(const Rational& q) { return -floor(Rational(-q)); }

Rational dot(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) fail(ErrorKind::domain, "dot: dimension mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return Integer(0);
    return boost::multiprecision::abs(a / gcd(a, b) * b);
}

Integer factorial(unsigned n) {
    Integer f(1);
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

Rational beta_constant(unsigned p, unsigned n) {
    return Rational(factorial(p) * factorial(n), factorial(p + n));
}

}  // namespace valinv
