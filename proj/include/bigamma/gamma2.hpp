#pragma once

#include <optional>

#include "bigamma/types.hpp"

namespace bigamma {

/// Domain report for a point (x,z): whether x avoids the nonpositive
/// integers, whether z avoids the pole lattice z = -(x+m), m >= -1, and
/// which pole was hit if any.
struct DomainClassification {
    bool x_ok = true;
    bool z_in_Sx = true;
    std::optional<int> pole_index;
    bool is_limit_zero_case = false;  // x -> -n with z not a nonnegative integer
};

DomainClassification classify(Complex x, Complex z);

/// The three pieces of the exact log formula
///   log Gamma(x,z) = (z+x-3/2) log(z+x-1) - z + 1 - (x-1/2) log x
///                    + I(x) - I(z+x-1)
/// valid for real x > 0, z > 0 with z+x-1 > 0.
struct StirlingParts {
    double main_term = 0.0;
    double i_x = 0.0;
    double i_zx = 0.0;
    double log_gamma() const { return main_term + i_x - i_zx; }
};

/// Definitional evaluation: Gamma(x,z) = ((z+x-1) e^{z gamma(x)} G(x,z))^{-1},
/// assembled in log space.
EvalResult gamma_weierstrass(Complex x, Complex z, const TruncationPolicy& policy);

/// Limit form n^z (x)_n / (z+x-1)_{n+1}, evaluated on a doubling ladder of n
/// with Richardson extrapolation in 1/n (order 4).
EvalResult gamma_euler_limit(Complex x, Complex z, const TruncationPolicy& policy);

/// Product form (x/((z+x-1)(z+x))) prod (1+1/n)^z (1+z/(x+n))^{-1} with
/// paired-term tail correction.
EvalResult gamma_euler_product(Complex x, Complex z, const TruncationPolicy& policy);

/// I(z) = int_0^infty P(t)/(z+t) dt with P(t) = t - floor(t) - 1/2, summed
/// over unit intervals in closed form. Negative for all z > 0; I(z) -> 0 as
/// z -> infinity.
double binet_integral(double z, const TruncationPolicy& policy);

StirlingParts gamma_stirling_log(double x, double z, const TruncationPolicy& policy);

/// Dispatcher: classifies the point, throws PoleError carrying the residue
/// on the pole lattice, picks the Stirling path for large real-positive
/// arguments and the Weierstrass path otherwise, shifting z upward through
/// the recurrence Gamma(x,z+1) = (z+x-1) Gamma(x,z) when Re(z+x) < 1.
EvalResult gamma_xz(Complex x, Complex z, const TruncationPolicy& policy);

/// Residue of Gamma(x,.) at z = -(x+m):
///   m = -1: 1/Gamma(x)   (== 1/((x-1)Gamma(x-1)))
///   m >= 0: (-1)^{m+1} (x)_{2m+1} / ((m+1)! Gamma(x+2m+1))
Complex residue_at(Complex x, int m);

/// Closed form for Gamma((2k+1)/2, (2l+1)/2), k,l >= 0, k+l >= 1.
double half_integer_value(int k, int l);

/// |Gamma(n+i,n+i)|^2 built from the base |Gamma(i,i)|^2 =
/// e^pi/(10(e^{2pi}+1)) by the two-variable recurrence.
double gaussian_norm(int n);

/// The displayed closed product formula for |Gamma(n+i,n+i)|^2, evaluated
/// literally (empty products = 1); kept separate so discrepancies can be
/// reported rather than asserted.
double gaussian_norm_closed_formula(int n);

}  // namespace bigamma
