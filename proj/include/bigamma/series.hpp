#pragma once

#include <vector>

#include "bigamma/types.hpp"

namespace bigamma {

enum class CenterVariable { z_at_1, x_at_1 };

/// Taylor expansion of Gamma(x,z+1) in z (center_variable z_at_1, anchor x)
/// or of Gamma(x+1,z) in x-1 (center_variable x_at_1, anchor z).
struct SeriesExpansion {
    CenterVariable center_variable;
    Complex anchor;
    std::vector<Complex> coefficients;
    double radius_hint = 1.0;

    Complex evaluate(Complex delta) const {
        Complex acc(0.0, 0.0);
        for (size_t m = coefficients.size(); m-- > 0;)
            acc = acc * delta + coefficients[m];
        return acc;
    }
};

/// Partial sum through order M of
///   log Gamma(x,z+1) = -z gamma(x) - sum_{m>=2} ((-1)^{m-1}/m) zeta(m,x) z^m,
/// valid on |z| < min(1,|x|), Re(x) > 0.
Complex log_series_in_z(Complex x, Complex z, int order);

/// Coefficients a_m(x) of Gamma(x,z+1) = sum a_m(x) z^m via the
/// derivative-matching recursion
///   m a_m = -gamma(x) a_{m-1} + sum_{k=0}^{m-2} (-1)^{m-k} zeta(m-k,x) a_k.
/// paper_literal switches the inner sign to the printed (-1)^m form, kept
/// for the typo-adjudication report.
SeriesExpansion coeffs_a(Complex x, int order, bool paper_literal = false);

/// Partial sum through order M of log Gamma(x+1,z) as a series in (x-1):
/// constant term sum_n (z log((n+1)/n) - log((z+n)/n)), linear coefficient
/// psi(z+1) + gamma - 1, and zeta-difference coefficients for m >= 2.
/// Requires real positive x, z with |x-1| < min(1,|z+1|).
Complex log_series_in_x(Complex x, Complex z, int order);

/// The linear coefficient c(z) of the x-series (= b_1(z)/b_0(z)).
Complex x_series_linear_coeff(Complex z);

/// Coefficients b_m(z) of Gamma(x+1,z) = sum b_m(z) (x-1)^m,
///   m b_m = c(z) b_{m-1}
///           + sum_{k=0}^{m-2} (-1)^{m-k} (zeta(m-k,z)-zeta(m-k)-z^{-(m-k)}+1) b_k.
/// paper_literal evaluates the printed recursion (additive b_{m-1}/m plus
/// the unreduced constant series) for the adjudication report.
SeriesExpansion coeffs_b(Complex z, int order, bool paper_literal = false);

}  // namespace bigamma
