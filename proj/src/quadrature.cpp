#include "valinv/quadrature.hpp"

#include "valinv/error.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <sstream>

namespace valinv {

namespace {

// Kronrod abscissae (positive half, descending) and weights; the Gauss
// 7-point rule uses the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) gauss += kWg[j / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult adaptive_gauss_kronrod(const std::function<double(double)>& f, double a, double b, double tol,
                                        std::size_t budget) {
    if (!(tol > 0)) fail(ErrorKind::domain, "quadrature tolerance must be positive");
    if (a == b) return {};
    std::priority_queue<Segment> work;
    Segment first = kronrod15(f, a, b);
    work.push(first);
    double total = first.value, error = first.error;
    std::size_t evals = 15;
    while (error > tol) {
        if (evals + 30 > budget) {
            std::ostringstream msg;
            msg << "quadrature did not reach tolerance " << tol << " within " << budget
                << " evaluations (error estimate " << error << ")";
            fail(ErrorKind::accuracy, msg.str());
        }
        Segment worst = work.top();
        work.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            // cannot split further in double precision
            fail(ErrorKind::accuracy, "quadrature interval collapsed before reaching tolerance");
        }
        Segment left = kronrod15(f, worst.a, mid);
        Segment right = kronrod15(f, mid, worst.b);
        evals += 30;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        work.push(left);
        work.push(right);
    }
    // re-sum to drop the drift of incremental updates
    double sum = 0.0, err = 0.0;
    while (!work.empty()) {
        sum += work.top().value;
        err += work.top().error;
        work.pop();
    }
    return {sum, err, evals};
}

Rational integrate_monomial_weighted(const PiecewisePolynomial& f, unsigned p, const Rational& a,
                                     const Rational& b) {
    if (p == 0) fail(ErrorKind::domain, "moment order p must be positive");
    if (a > b || a < f.begin() || b > f.end())
        fail(ErrorKind::range, "integration range [" + to_string(a) + ", " + to_string(b) + "] outside domain");
    if (f.pieces().empty()) return Rational(0);
    return f.times_monomial(p - 1).integral(a, b);
}

double integrate_real_power(const PiecewisePolynomial& f, double p, const Rational& a, const Rational& b,
                            double tol) {
    if (!(tol > 0)) fail(ErrorKind::domain, "quadrature tolerance must be positive");
    if (!(p >= 1.0)) fail(ErrorKind::domain, "real moment order must satisfy p >= 1");
    if (a > b || a < f.begin() || b > f.end())
        fail(ErrorKind::range, "integration range [" + to_string(a) + ", " + to_string(b) + "] outside domain");
    if (a < 0 && p != std::floor(p)) fail(ErrorKind::domain, "x^(p-1) undefined for negative x and fractional p");
    if (f.pieces().empty() || a == b) return 0.0;

    const auto& bp = f.breakpoints();
    std::size_t active = 0;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i)
        if (std::max(a, bp[i]) < std::min(b, bp[i + 1])) ++active;
    const double share = tol / static_cast<double>(std::max<std::size_t>(active, 1));

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        Rational lo = std::max(a, bp[i]);
        Rational hi = std::min(b, bp[i + 1]);
        if (!(lo < hi)) continue;
        const Polynomial& piece = f.pieces()[i];
        if (piece.is_zero()) continue;
        auto integrand = [&piece, p](double x) { return std::pow(x, p - 1.0) * piece.eval(x); };
        total += adaptive_gauss_kronrod(integrand, to_double(lo), to_double(hi), share).value;
    }
    return total;
}

}  // namespace valinv
