#include "bigamma/special.hpp"

#include <algorithm>
#include <cmath>

#include "bigamma/numeric_util.hpp"

namespace bigamma {

const char* method_name(Method m) {
    switch (m) {
        case Method::euler_series: return "euler-series";
        case Method::stieltjes_limit: return "stieltjes-limit";
        case Method::weierstrass: return "weierstrass";
        case Method::euler_limit: return "euler-limit";
        case Method::euler_product: return "euler-product";
        case Method::stirling: return "stirling";
    }
    return "?";
}

namespace {

double lattice_tol(Complex a, Complex b = Complex(0, 0)) {
    return 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

// x within tolerance of a nonpositive integer?
bool on_nonpositive_integer(Complex x, long long* idx = nullptr) {
    long long k;
    if (!near_integer(x, lattice_tol(x), &k)) return false;
    if (k > 0) return false;
    if (idx) *idx = k;
    return true;
}

// B_{2j}/(2j)! for the Euler-Maclaurin tail, j = 1..6 (through B12).
constexpr double kBernFact[7] = {
    1.0,
    8.3333333333333333333e-02,   // B2/2!
    -1.3888888888888888889e-03,  // B4/4!
    3.3068783068783068783e-05,   // B6/6!
    -8.2671957671957671958e-07,  // B8/8!
    2.0876756987868098979e-08,   // B10/10!
    -5.2841901386874931848e-10,  // B12/12!
};

}  // namespace

Complex pochhammer(Complex z, int n) {
    if (n < 0) throw DomainError("pochhammer: n must be >= 0");
    Complex acc(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
        acc *= z + double(k);
        if (std::abs(acc) > kOverflowLimit)
            throw OverflowError("pochhammer: magnitude exceeds representable range");
    }
    return acc;
}

Complex hurwitz_zeta(int m, Complex x) {
    if (m < 2) throw DomainError("hurwitz_zeta: order must be >= 2");
    if (!(x.real() > 0.0)) throw DomainError("hurwitz_zeta: Re(x) must be > 0");

    // Push the summation point far enough right that the Euler-Maclaurin
    // expansion is in its asymptotic regime even for small Re(x) or large
    // |Im(x)|.
    int n_direct = static_cast<int>(std::ceil(std::max(
        {16.0, std::fabs(x.imag()), 10.0 - x.real()})));

    KahanSum<Complex> sum;
    for (int n = 0; n < n_direct; ++n) sum.add(cpow_int(x + double(n), -m));

    const Complex w = x + double(n_direct);
    const Complex wpow = std::pow(w, -double(m));
    sum.add(wpow * w / double(m - 1));  // integral term w^{1-m}/(m-1)
    sum.add(0.5 * wpow);

    Complex scp(double(m), 0.0);  // (m)_{2j-1}
    Complex pcp = wpow / w;
    Complex total = sum.total();
    for (int j = 1; j <= 6; ++j) {
        Complex delta = kBernFact[j] * scp * pcp;
        total += delta;
        if (std::abs(delta) < 0.25 * 1e-16 * std::abs(total)) break;
        scp *= double(m + 2 * j - 1) * double(m + 2 * j);
        pcp /= w * w;
    }
    return total;
}

double riemann_zeta(int m) {
    return hurwitz_zeta(m, Complex(1.0, 0.0)).real();
}

namespace {

// Lanczos g = 7, 9 coefficients.
constexpr double kLanczos7[9] = {
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7,
};

Complex lanczos_core(Complex z) {
    // valid for Re(z) >= 0.5
    const Complex zm1 = z - 1.0;
    Complex a(kLanczos7[0], 0.0);
    for (int k = 1; k < 9; ++k) a += kLanczos7[k] / (zm1 + double(k));
    const Complex t = zm1 + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, zm1 + 0.5) * std::exp(-t) * a;
}

}  // namespace

Complex gamma_classical(Complex z) {
    long long k;
    if (on_nonpositive_integer(z, &k))
        throw PoleError("gamma_classical: pole at nonpositive integer", static_cast<int>(k));

    Complex value;
    if (z.real() < 0.5) {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
        const Complex s = std::sin(kPi * z);
        value = kPi / (s * lanczos_core(1.0 - z));
    } else {
        value = lanczos_core(z);
    }
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) ||
        std::abs(value) > kOverflowLimit)
        throw OverflowError("gamma_classical: magnitude exceeds representable range");
    return value;
}

Complex digamma(Complex x) {
    long long k;
    if (on_nonpositive_integer(x, &k))
        throw PoleError("digamma: pole at nonpositive integer", static_cast<int>(k));

    KahanSum<Complex> rec;
    Complex w = x;
    int guard = 0;
    while (w.real() < 12.0) {
        rec.add(1.0 / w);
        w += 1.0;
        if (++guard > 2000000)
            throw DomainError("digamma: argument too far left of the axis");
    }
    // psi(w) ~ ln w - 1/(2w) - sum B_{2n} / (2n w^{2n})
    static constexpr double b2n_over_2n[7] = {
        1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
        1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
    };
    const Complex inv2 = 1.0 / (w * w);
    Complex asym(0.0, 0.0);
    Complex p = inv2;
    for (int n = 0; n < 7; ++n) {
        asym += b2n_over_2n[n] * p;
        p *= inv2;
    }
    return std::log(w) - 0.5 / w - asym - rec.total();
}

EvalResult euler_gamma_x(Complex x, const TruncationPolicy& policy) {
    policy.validate();
    long long k;
    if (on_nonpositive_integer(x, &k))
        throw PoleError("euler_gamma_x: pole at nonpositive integer", static_cast<int>(k));

    const double ax = std::abs(x);
    const int n_terms = std::max({policy.max_terms, 8, int(std::ceil(4.0 * (ax + 1.0)))});

    KahanSum<Complex> sum;
    sum.add(1.0 / x);
    double term_mass = std::abs(1.0 / x);
    for (int n = 1; n <= n_terms; ++n) {
        // 1/(x+n) - log((n+1)/n) rearranged into two small pieces
        const double dn = double(n);
        const Complex piece = -x / (dn * (dn + x));
        sum.add(piece);
        sum.add(rlog1p(1.0 / dn));
        term_mass += std::abs(piece) + rlog1p(1.0 / dn);
    }
    Complex value = sum.total();

    // Remainder past N: sum_{k>=2} [(-x)^{k-1} + (-1)^k/k] zeta(k, N+1).
    // tail_order sets the minimum depth; deeper terms are added until they
    // fall below the rounding floor, so the reported value does not depend
    // on the policy tolerance.
    const Complex base(double(n_terms + 1), 0.0);
    Complex xpow = -x;  // (-x)^{k-1} at k = 2
    double sign = 1.0;  // (-1)^k at k = 2
    double omitted = 0.0;
    const int min_depth = policy.tail_order + 1;
    for (int kk = 2; kk <= 13; ++kk) {
        const Complex coef = xpow + sign / double(kk);
        const Complex term = coef * hurwitz_zeta(kk, base);
        omitted = std::abs(term);
        if (kk > min_depth && omitted < 1e-17 * (1.0 + std::abs(value))) break;
        value += term;
        omitted *= ax / double(n_terms);  // next-term scale
        xpow *= -x;
        sign = -sign;
    }

    const double rounding = 2.5e-16 * (term_mass + 2.0);
    const double err = (omitted + rounding) / std::max(std::abs(value), 1e-300);
    return {value, err, Method::euler_series, n_terms};
}

EvalResult stieltjes_zeroth(Complex x, const TruncationPolicy& policy) {
    policy.validate();
    long long k;
    if (on_nonpositive_integer(x, &k))
        throw PoleError("stieltjes_zeroth: pole at nonpositive integer", static_cast<int>(k));

    const double ax = std::abs(x);
    const int n_terms = std::max({policy.max_terms, 8, int(std::ceil(4.0 * (ax + 1.0)))});

    KahanSum<Complex> sum;
    double term_mass = 0.0;
    for (int n = 0; n <= n_terms; ++n) {
        const Complex piece = 1.0 / (x + double(n));
        sum.add(piece);
        term_mass += std::abs(piece);
    }
    const Complex w = x + double(n_terms);
    Complex value = sum.total() - std::log(w);

    // psi(w+1) - log(w) = 1/(2w) - 1/(12w^2) + 1/(120w^4) - 1/(252w^6) + ...
    const Complex inv = 1.0 / w;
    const Complex inv2 = inv * inv;
    value -= inv * (0.5 - inv * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 / 252.0)));

    const double next = std::abs(inv2 * inv2 * inv2 * inv2) / 240.0;
    const double rounding = 2.5e-16 * (term_mass + std::abs(std::log(w)) + 2.0);
    const double err = (next + rounding) / std::max(std::abs(value), 1e-300);
    return {value, err, Method::stieltjes_limit, n_terms};
}

}  // namespace bigamma
