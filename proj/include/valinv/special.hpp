#pragma once

namespace valinv {

/// ln Γ(x) for x > 0; relative error <= 1e-12 away from the zeros at 1 and 2.
double log_gamma(double x);

/// Γ(p+1)Γ(n+1)/Γ(p+n+1) for real p, via log-gamma.
double beta_constant_real(double p, double n);

}  // namespace valinv
