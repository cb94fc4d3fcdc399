#include "bigamma/series.hpp"

#include <algorithm>
#include <cmath>

#include "bigamma/numeric_util.hpp"
#include "bigamma/special.hpp"

namespace bigamma {

namespace {

void require_z_disc(Complex x, Complex z) {
    if (!(x.real() > 0.0))
        throw DomainError("z-series: Re(x) must be > 0");
    if (!(std::abs(z) < std::min(1.0, std::abs(x))))
        throw DomainError("z-series: |z| must be < min(1,|x|)");
}

bool real_positive(Complex v) {
    return v.real() > 0.0 && std::fabs(v.imag()) <= 1e-13 * std::max(1.0, std::abs(v));
}

// zeta(j,z) - zeta(j) - z^{-j} + 1, the m >= 2 coefficient core of the
// x-series.
Complex zeta_diff(int j, Complex z) {
    return hurwitz_zeta(j, z) - riemann_zeta(j) - cpow_int(z, -j) + 1.0;
}

// Constant term of the x-series: sum_{n>=1} (z log((n+1)/n) - log((z+n)/n)),
// summed with compensated pieces plus a zeta tail. Equals log(z Gamma(z)).
Complex x_series_constant(Complex z) {
    const int n_terms = std::max(10000, int(std::ceil(4.0 * std::abs(z))) + 16);
    KahanSum<Complex> sum;
    for (int n = 1; n <= n_terms; ++n) {
        const double dn = double(n);
        // z log(1+1/n) - log(1+z/n) = -z rlog1p(1/n) - (log(1+z/n) - z/n)
        sum.add(-z * rlog1p(1.0 / dn) - log1p_minus(z / dn));
    }
    Complex total = sum.total();
    // tail: sum_{k>=2} (-1)^k (z^k - z)/k zeta(k, N+1)
    const Complex base(double(n_terms + 1), 0.0);
    Complex zk = z * z;
    double sign = 1.0;
    for (int k = 2; k <= 13; ++k) {
        const Complex term = sign * (zk - z) / double(k) * hurwitz_zeta(k, base);
        total += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(total))) break;
        zk *= z;
        sign = -sign;
    }
    return total;
}

}  // namespace

Complex log_series_in_z(Complex x, Complex z, int order) {
    if (order < 1) throw DomainError("z-series: order must be >= 1");
    require_z_disc(x, z);

    Complex acc = z * digamma(x);  // -z gamma(x)
    Complex zm = z * z;
    double sign = 1.0;  // (-1)^m at m = 2
    for (int m = 2; m <= order; ++m) {
        acc += sign / double(m) * hurwitz_zeta(m, x) * zm;
        zm *= z;
        sign = -sign;
    }
    return acc;
}

SeriesExpansion coeffs_a(Complex x, int order, bool paper_literal) {
    if (order < 0) throw DomainError("coeffs_a: order must be >= 0");
    if (!(x.real() > 0.0)) throw DomainError("coeffs_a: Re(x) must be > 0");

    const Complex gamma_x = -digamma(x);
    std::vector<Complex> zeta_m(order + 1);
    for (int m = 2; m <= order; ++m) zeta_m[m] = hurwitz_zeta(m, x);

    std::vector<Complex> a(order + 1);
    a[0] = Complex(1.0, 0.0);
    for (int m = 1; m <= order; ++m) {
        Complex s = -gamma_x * a[m - 1];
        for (int k = 0; k <= m - 2; ++k) {
            const double sign = ((paper_literal ? m : m - k) % 2 == 0) ? 1.0 : -1.0;
            s += sign * zeta_m[m - k] * a[k];
        }
        a[m] = s / double(m);
    }
    return {CenterVariable::z_at_1, x, std::move(a), std::min(1.0, std::abs(x))};
}

Complex x_series_linear_coeff(Complex z) {
    return digamma(z + 1.0) + kEulerGamma - 1.0;
}

Complex log_series_in_x(Complex x, Complex z, int order) {
    if (order < 0) throw DomainError("x-series: order must be >= 0");
    if (!real_positive(x) || !real_positive(z))
        throw DomainError("x-series: x and z must be real positive");
    if (!(std::abs(x - 1.0) < std::min(1.0, std::abs(z + 1.0))))
        throw DomainError("x-series: |x-1| must be < min(1,|z+1|)");

    const Complex dx = x - 1.0;
    Complex acc = x_series_constant(z);
    if (order >= 1) acc += x_series_linear_coeff(z) * dx;
    Complex p = dx * dx;
    double sign = 1.0;  // (-1)^m at m = 2
    for (int m = 2; m <= order; ++m) {
        acc += sign / double(m) * zeta_diff(m, z) * p;
        p *= dx;
        sign = -sign;
    }
    return acc;
}

SeriesExpansion coeffs_b(Complex z, int order, bool paper_literal) {
    if (order < 0) throw DomainError("coeffs_b: order must be >= 0");
    if (!(z.real() > 0.0)) throw DomainError("coeffs_b: Re(z) must be > 0");

    std::vector<Complex> e(order + 1);
    for (int j = 2; j <= order; ++j) e[j] = zeta_diff(j, z);

    const Complex c = x_series_linear_coeff(z);
    // the printed recursion adds the unreduced constant series
    // sum_{n>=2} z/(n(n+z)) = c(z) + 1/(1+z) as a standalone term
    const Complex c_printed = c + 1.0 / (1.0 + z);

    std::vector<Complex> b(order + 1);
    b[0] = z * gamma_classical(z);
    for (int m = 1; m <= order; ++m) {
        Complex s(0.0, 0.0);
        for (int k = 0; k <= m - 2; ++k) {
            const double sign = ((m - k) % 2 == 0) ? 1.0 : -1.0;
            s += sign * e[m - k] * b[k];
        }
        if (paper_literal)
            b[m] = b[m - 1] / double(m) + c_printed + s / double(m);
        else
            b[m] = (c * b[m - 1] + s) / double(m);
    }
    return {CenterVariable::x_at_1, z, std::move(b), std::min(1.0, std::abs(z + 1.0))};
}

}  // namespace bigamma
