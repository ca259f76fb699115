#include "valinv/special.hpp"

#include "valinv/error.hpp"

#include <cmath>

namespace valinv {

double log_gamma(double x) {
    if (!(x > 0) || !std::isfinite(x)) fail(ErrorKind::domain, "log_gamma requires finite x > 0");
    if (x == std::floor(x) && x <= 170.0) {
        // (x-1)! is exactly representable up to 22!, and within 1 ulp per step beyond
        double fact = 1.0;
        for (int k = 2; k < static_cast<int>(x); ++k) fact *= k;
        return std::log(fact);
    }
    return std::lgamma(x);
}

double beta_constant_real(double p, double n) {
    return std::exp(log_gamma(p + 1.0) + log_gamma(n + 1.0) - log_gamma(p + n + 1.0));
}

}  // namespace valinv
