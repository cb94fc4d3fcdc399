#include "bigamma/product.hpp"

#include <algorithm>
#include <cmath>

#include "bigamma/numeric_util.hpp"
#include "bigamma/special.hpp"

namespace bigamma {

namespace {

double scale_tol(Complex x, Complex z = Complex(0, 0)) {
    return 1e-12 * std::max({1.0, std::abs(x), std::abs(z)});
}

bool x_on_nonpositive_lattice(Complex x) {
    long long k;
    return near_integer(x, scale_tol(x), &k) && k <= 0;
}

// z = -(x+m) for some integer m >= 0, within detection tolerance.
bool on_zero_lattice(Complex x, Complex z, long long* m_out = nullptr) {
    const Complex w = z + x;
    long long p;
    if (!near_integer(w, scale_tol(x, z), &p)) return false;
    if (p > 0) return false;
    if (m_out) *m_out = -p;
    return true;
}

int term_count(const TruncationPolicy& policy, double reach) {
    return std::max({policy.max_terms, 8, int(std::ceil(2.0 * reach)) + 8});
}

}  // namespace

LogEval g_product_log(Complex x, Complex z, const TruncationPolicy& policy) {
    policy.validate();
    if (x_on_nonpositive_lattice(x))
        throw DomainError("G(x,z): x must not be a nonpositive integer");

    const int n_terms = term_count(policy, std::abs(x) + std::abs(z));
    KahanSum<Complex> sum;
    double term_mass = 0.0;
    for (int n = 0; n < n_terms; ++n) {
        const Complex t = log1p_minus(z / (x + double(n)));
        sum.add(t);
        term_mass += std::abs(t);
    }
    Complex logv = sum.total();

    // Tail: sum_{k>=2} (-1)^{k-1} z^k/k zeta(k, x+N). tail_order sets the
    // minimum depth; deeper terms are added until they reach the rounding
    // floor, keeping the value independent of the policy tolerance.
    const Complex base = x + double(n_terms);
    Complex zpow = -z * z;  // (-1)^{k-1} z^k at k = 2
    double omitted = 0.0;
    const int min_depth = policy.tail_order + 1;
    for (int k = 2; k <= 13; ++k) {
        const Complex term = zpow / double(k) * hurwitz_zeta(k, base);
        omitted = std::abs(term);
        if (k > min_depth && omitted < 1e-17 * (1.0 + std::abs(logv))) break;
        logv += term;
        omitted *= std::abs(z) / std::abs(base);  // next-term scale
        zpow *= -z;
    }

    const double err = omitted + 2.5e-16 * (term_mass + 1.0);
    return {logv, err, n_terms};
}

EvalResult g_product(Complex x, Complex z, const TruncationPolicy& policy) {
    policy.validate();
    if (x_on_nonpositive_lattice(x))
        throw DomainError("G(x,z): x must not be a nonpositive integer");
    if (on_zero_lattice(x, z))
        return {Complex(0.0, 0.0), 0.0, Method::weierstrass, 0};

    const LogEval lg = g_product_log(x, z, policy);
    if (lg.log_value.real() > std::log(kOverflowLimit))
        throw OverflowError("G(x,z): magnitude exceeds representable range");
    return {std::exp(lg.log_value), lg.err_abs, Method::weierstrass, lg.terms_used};
}

double g_shift_z_residual(Complex x, Complex z, const TruncationPolicy& policy) {
    const Complex lhs = g_product(x, z - 1.0, policy).value;
    const Complex gz = g_product(x, z, policy).value;
    const Complex gamma_x = euler_gamma_x(x, policy).value;
    const Complex rhs = (z + x - 1.0) * std::exp(gamma_x) * gz;
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

double g_shift_x_residual(Complex x, Complex z, const TruncationPolicy& policy) {
    const Complex lhs = g_product(x - 1.0, z, policy).value;
    const Complex gz = g_product(x, z, policy).value;
    const Complex rhs = (z + x - 1.0) / (x - 1.0) * std::exp(-z / (x - 1.0)) * gz;
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

double g_sin_residual(Complex x, Complex z, const TruncationPolicy& policy,
                      CotVariant variant) {
    long long k;
    if (near_integer(x, scale_tol(x, z), &k))
        throw DomainError("g_sin_residual: x must not be an integer");

    const Complex lhs = g_product(x, -z, policy).value * g_product(-x, z, policy).value;

    const Complex sx = std::sin(kPi * x);
    const Complex cot = std::cos(kPi * x) / sx;
    const Complex expo = (variant == CotVariant::pi_cot ? kPi * z * cot : z * cot) + z / x;
    const Complex rhs =
        (z - x) * std::sin(kPi * (z - x)) / (x * sx) * std::exp(expo);
    return rel_residual(lhs, rhs);
}

double sin2_product_residual(Complex x, Complex z, const TruncationPolicy& policy) {
    long long k;
    if (near_integer(x, scale_tol(x, z), &k))
        throw DomainError("sin2_product_residual: x must not be an integer");
    const Complex z2 = z * z, x2 = x * x;
    if (std::abs(z2 - x2) <= scale_tol(x, z))
        throw DomainError("sin2_product_residual: z^2 must differ from x^2");

    const int n_terms = term_count(policy, std::abs(x) + std::abs(z));
    KahanSum<Complex> sum;
    for (int n = 1; n <= n_terms; ++n) {
        const Complex wp = z / (x + double(n)), wm = z / (double(n) - x);
        sum.add(std::log(1.0 - wp * wp) + std::log(1.0 - wm * wm));
    }
    Complex logv = sum.total();

    // log(1-w) = -sum w^k/k with w = z^2/(n+-x)^2
    const Complex bp = x + double(n_terms + 1), bm = double(n_terms + 1) - x;
    Complex zp = z2;
    for (int kk = 1; kk <= 6; ++kk) {
        const Complex term =
            -zp / double(kk) * (hurwitz_zeta(2 * kk, bp) + hurwitz_zeta(2 * kk, bm));
        logv += term;
        if (std::abs(term) < 1e-17 * (1.0 + std::abs(logv))) break;
        zp *= z2;
    }
    const Complex lhs = std::exp(logv);

    const Complex sx = std::sin(kPi * x), sz = std::sin(kPi * z);
    const Complex rhs = (x / sx) * (x / sx) * (sz * sz - sx * sx) / (z2 - x2);
    return rel_residual(lhs, rhs);
}

}  // namespace bigamma
