#pragma once

#include "bigamma/types.hpp"

namespace bigamma {

/// Rising factorial (z)_n = z(z+1)...(z+n-1), (z)_0 = 1. The product is
/// accumulated in ascending order so results are reproducible bit for bit.
Complex pochhammer(Complex z, int n);

/// Hurwitz zeta sum_{n>=0} (n+x)^{-m} for integer m >= 2 and Re(x) > 0.
/// Direct summation plus Euler-Maclaurin tail through B12.
Complex hurwitz_zeta(int m, Complex x);

/// Riemann zeta at integer m >= 2; equals hurwitz_zeta(m, 1).
double riemann_zeta(int m);

/// Classical gamma function, Lanczos approximation (g = 7, 9 terms) with
/// reflection for Re(z) < 1/2. Good to ~1e-13 relative.
Complex gamma_classical(Complex z);

/// Digamma psi(z) by upward recurrence to Re >= 12 followed by the
/// asymptotic series through B14.
Complex digamma(Complex x);

/// Generalized Euler constant gamma(x) = 1/x + sum_{n>=1} (1/(x+n) -
/// log((n+1)/n)), evaluated from the partial sums with zeta tail
/// corrections. Equals -digamma(x).
EvalResult euler_gamma_x(Complex x, const TruncationPolicy& policy);

/// Zeroth Stieltjes constant gamma_0(x) via the log(n+x) limit form; an
/// independent route to the same value as euler_gamma_x.
EvalResult stieltjes_zeroth(Complex x, const TruncationPolicy& policy);

}  // namespace bigamma
