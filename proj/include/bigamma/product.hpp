#pragma once

#include "bigamma/types.hpp"

namespace bigamma {

/// log of a truncated evaluation together with an absolute error bound on
/// the log (== relative bound on the exponentiated value).
struct LogEval {
    Complex log_value;
    double err_abs = 0.0;
    long terms_used = 0;
};

enum class CotVariant { cot, pi_cot };

/// log G(x,z) where G(x,z) = prod_{n>=0} (1 + z/(n+x)) e^{-z/(n+x)},
/// accumulated as sum [log(1+z/(n+x)) - z/(n+x)] with compensated
/// summation and zeta tail corrections. Precondition: x not a nonpositive
/// integer and z not on the zero lattice z = -(x+m), m >= 0.
LogEval g_product_log(Complex x, Complex z, const TruncationPolicy& policy);

/// G(x,z) itself; returns exactly 0 when z lies on the zero lattice
/// (within detection tolerance 1e-12, scaled).
EvalResult g_product(Complex x, Complex z, const TruncationPolicy& policy);

/// Relative residual of G(x,z-1) = (z+x-1) e^{gamma(x)} G(x,z).
double g_shift_z_residual(Complex x, Complex z, const TruncationPolicy& policy);

/// Relative residual of G(x-1,z) = ((z+x-1)/(x-1)) e^{-z/(x-1)} G(x,z).
double g_shift_x_residual(Complex x, Complex z, const TruncationPolicy& policy);

/// Relative residual of
///   G(x,-z) G(-x,z) = ((z-x) sin pi(z-x) / (x sin pi x)) e^{c(x) z + z/x}
/// with c(x) = cot(pi x) (literal reading) or pi cot(pi x); the two
/// readings are adjudicated numerically by the harness.
double g_sin_residual(Complex x, Complex z, const TruncationPolicy& policy,
                      CotVariant variant);

/// Relative residual of the closed form for
///   prod_{n>=1} (1 - z^2/(n+x)^2)(1 - z^2/(n-x)^2)
/// against (x/sin pi x)^2 (sin^2 pi z - sin^2 pi x)/(z^2 - x^2).
double sin2_product_residual(Complex x, Complex z, const TruncationPolicy& policy);

}  // namespace bigamma
