#include "bigamma/gamma2.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bigamma/numeric_util.hpp"
#include "bigamma/product.hpp"
#include "bigamma/special.hpp"

namespace bigamma {

namespace {

double scale_tol(Complex x, Complex z) {
    return 1e-12 * std::max({1.0, std::abs(x), std::abs(z)});
}

void require_clean(const DomainClassification& cls, Complex x) {
    if (!cls.x_ok)
        throw DomainError("Gamma(x,z): x must not be a nonpositive integer");
    if (cls.pole_index) {
        const int m = *cls.pole_index;
        Complex res(0.0, 0.0);
        bool have = true;
        try {
            res = residue_at(x, m);
        } catch (const std::exception&) {
            have = false;
        }
        if (have)
            throw PoleError("Gamma(x,z): pole at z = -(x+m), m = " + std::to_string(m), m, res);
        throw PoleError("Gamma(x,z): pole at z = -(x+m), m = " + std::to_string(m), m);
    }
}

bool is_real(Complex v) { return std::fabs(v.imag()) <= 1e-13 * std::max(1.0, std::abs(v)); }

}  // namespace

DomainClassification classify(Complex x, Complex z) {
    DomainClassification cls;
    const double tol = scale_tol(x, z);

    long long kx;
    const bool x_on_lattice = near_integer(x, tol, &kx) && kx <= 0;
    cls.x_ok = !x_on_lattice;

    long long p;
    if (near_integer(z + x, tol, &p) && p <= 1) {
        cls.z_in_Sx = false;
        cls.pole_index = static_cast<int>(-p);
    }

    long long kz;
    const bool z_nonneg_int = near_integer(z, tol, &kz) && kz >= 0;
    cls.is_limit_zero_case = x_on_lattice && !z_nonneg_int;
    return cls;
}

EvalResult gamma_weierstrass(Complex x, Complex z, const TruncationPolicy& policy) {
    policy.validate();
    const DomainClassification cls = classify(x, z);
    require_clean(cls, x);

    const EvalResult g = euler_gamma_x(x, policy);
    const LogEval lg = g_product_log(x, z, policy);

    const Complex log_inv = std::log(z + x - 1.0) + z * g.value + lg.log_value;
    if (-log_inv.real() > std::log(kOverflowLimit))
        throw OverflowError("Gamma(x,z): magnitude exceeds representable range");
    const Complex value = std::exp(-log_inv);

    const double err = lg.err_abs + std::abs(z) * g.err_estimate * std::abs(g.value) +
                       4e-16 * (1.0 + std::abs(log_inv));
    return {value, err, Method::weierstrass, lg.terms_used};
}

EvalResult gamma_euler_limit(Complex x, Complex z, const TruncationPolicy& policy) {
    policy.validate();
    const DomainClassification cls = classify(x, z);
    require_clean(cls, x);

    const int levels = 5;  // order-4 extrapolation
    const long n_max_pow = 1L << (levels - 1);
    const long n0 = std::max(64L, long(policy.max_terms) / n_max_pow);

    // One pass accumulates log a_n, snapshotting at the nodes n_j = n0 2^j:
    //   log a_n = z log n - sum_{k<n} log(1 + (z-1)/(x+k)) - log(z+x-1+n).
    std::vector<Complex> vals;
    KahanSum<Complex> sum;
    long next = n0;
    for (long k = 0; k < n0 * n_max_pow; ++k) {
        sum.add(std::log(1.0 + (z - 1.0) / (x + double(k))));
        if (k + 1 == next) {
            const Complex log_an = z * std::log(double(next)) - sum.total() -
                                   std::log(z + x - 1.0 + double(next));
            if (log_an.real() > std::log(kOverflowLimit))
                throw OverflowError("gamma_euler_limit: magnitude exceeds representable range");
            vals.push_back(std::exp(log_an));
            next *= 2;
        }
    }

    Complex value;
    double step;
    if (policy.acceleration == Acceleration::richardson) {
        // Neville table in h = 1/n, step ratio 2; a_n has a full 1/n series.
        std::vector<std::vector<Complex>> t(vals.size());
        t[0] = {vals[0]};
        for (size_t j = 1; j < vals.size(); ++j) {
            t[j].resize(j + 1);
            t[j][0] = vals[j];
            double p2 = 2.0;
            for (size_t m = 1; m <= j; ++m) {
                t[j][m] = t[j][m - 1] + (t[j][m - 1] - t[j - 1][m - 1]) / (p2 - 1.0);
                p2 *= 2.0;
            }
        }
        const size_t J = vals.size() - 1;
        value = t[J][J];
        step = std::abs(t[J][J] - t[J][J - 1]);
    } else {
        value = vals.back();
        step = std::abs(vals.back() - vals[vals.size() - 2]);
    }
    const double err =
        (step + 1e-15 * std::abs(value)) / std::max(std::abs(value), 1e-300);
    return {value, err, Method::euler_limit, n0 * n_max_pow};
}

EvalResult gamma_euler_product(Complex x, Complex z, const TruncationPolicy& policy) {
    policy.validate();
    const DomainClassification cls = classify(x, z);
    require_clean(cls, x);
    if (std::abs(z + x) <= scale_tol(x, z))
        throw PoleError("gamma_euler_product: pole at z = -x", 0, residue_at(x, 0));

    const int n_terms =
        std::max({policy.max_terms, 8, int(std::ceil(2.0 * (std::abs(x) + std::abs(z)))) + 8});

    // term_n = z log(1+1/n) - log(1+z/(x+n)), rearranged into three pieces
    // that are all O(1/n^2).
    KahanSum<Complex> sum;
    double term_mass = 0.0;
    for (int n = 1; n <= n_terms; ++n) {
        const double dn = double(n);
        const Complex piece = -z * rlog1p(1.0 / dn) + z * x / (dn * (x + dn)) -
                              log1p_minus(z / (x + dn));
        sum.add(piece);
        term_mass += std::abs(piece);
    }

    // Tail: z [psi(N+1+x) - psi(N+1)] +
    //       sum_{k>=2} (-1)^{k-1}/k [z zeta(k,N+1) - z^k zeta(k,N+1+x)].
    const Complex b0(double(n_terms + 1), 0.0);
    const Complex bx = b0 + x;
    Complex tail = z * (digamma(bx) - digamma(b0));
    Complex zk = z * z;
    double sign = -1.0;  // (-1)^{k-1} at k = 2
    double omitted = 0.0;
    const int min_depth = policy.tail_order + 1;
    for (int k = 2; k <= 13; ++k) {
        const Complex term =
            sign / double(k) * (z * hurwitz_zeta(k, b0) - zk * hurwitz_zeta(k, bx));
        omitted = std::abs(term);
        if (k > min_depth && omitted < 1e-17) break;
        tail += term;
        omitted *= (std::abs(z) + 1.0) / double(n_terms);
        zk *= z;
        sign = -sign;
    }

    const Complex log_gamma =
        std::log(x) - std::log(z + x - 1.0) - std::log(z + x) + sum.total() + tail;
    if (log_gamma.real() > std::log(kOverflowLimit))
        throw OverflowError("gamma_euler_product: magnitude exceeds representable range");

    const double err = omitted + 2e-16 * (term_mass + 4.0 + std::abs(log_gamma));
    return {std::exp(log_gamma), err, Method::euler_product, n_terms};
}

double binet_integral(double z, const TruncationPolicy& policy) {
    policy.validate();
    if (!(z > 0.0)) throw DomainError("binet_integral: z must be > 0");

    const int n_terms = std::clamp(policy.max_terms, 64, 8192);
    KahanSum<double> sum;
    for (int n = 0; n < n_terms; ++n) {
        const double a = z + double(n);
        const double t = 1.0 / (2.0 * a + 1.0);
        if (t <= 0.5) {
            // exact rewrite: term = -sum_{j>=1} t^{2j}/(2j+1)
            const double t2 = t * t;
            double p = t2, acc = 0.0;
            for (int j = 1; j < 40; ++j) {
                const double d = p / double(2 * j + 1);
                acc += d;
                if (d < 1e-18 * acc) break;
                p *= t2;
            }
            sum.add(-acc);
        } else {
            sum.add(1.0 - (a + 0.5) * std::log1p(1.0 / a));
        }
    }
    // Remaining intervals equal I(z+N); Stirling-series form of the tail.
    const double w = z + double(n_terms);
    const double w2 = w * w;
    const double tail =
        -(1.0 / 12.0) / w + (1.0 / 360.0) / (w * w2) - (1.0 / 1260.0) / (w * w2 * w2) +
        (1.0 / 1680.0) / (w * w2 * w2 * w2);
    return sum.total() + tail;
}

StirlingParts gamma_stirling_log(double x, double z, const TruncationPolicy& policy) {
    if (!(x > 0.0) || !(z > 0.0) || !(z + x - 1.0 > 0.0))
        throw DomainError("gamma_stirling_log: requires x > 0, z > 0, z+x-1 > 0");
    StirlingParts parts;
    parts.main_term =
        (z + x - 1.5) * std::log(z + x - 1.0) - z + 1.0 - (x - 0.5) * std::log(x);
    parts.i_x = binet_integral(x, policy);
    parts.i_zx = binet_integral(z + x - 1.0, policy);
    return parts;
}

EvalResult gamma_xz(Complex x, Complex z, const TruncationPolicy& policy) {
    policy.validate();
    const DomainClassification cls = classify(x, z);
    require_clean(cls, x);

    if (is_real(x) && is_real(z) && x.real() > 0.0 && z.real() > 0.0 &&
        z.real() + x.real() - 1.0 > 0.1 && std::max(x.real(), z.real()) > 50.0) {
        const StirlingParts parts = gamma_stirling_log(x.real(), z.real(), policy);
        const double lg = parts.log_gamma();
        if (lg > std::log(kOverflowLimit))
            throw OverflowError("Gamma(x,z): magnitude exceeds representable range");
        return {Complex(std::exp(lg), 0.0), 2e-15 * (1.0 + std::fabs(lg)),
                Method::stirling, 0};
    }

    // Shift z upward until Re(z+x) >= 1 so the product path is
    // well-conditioned, then divide the recurrence factors back out.
    int shift = 0;
    if (z.real() + x.real() < 1.0)
        shift = int(std::ceil(1.0 - (z.real() + x.real())));

    EvalResult base = gamma_weierstrass(x, z + double(shift), policy);
    Complex value = base.value;
    for (int j = shift - 1; j >= 0; --j) {
        value /= z + x - 1.0 + double(j);
        if (std::abs(value) > kOverflowLimit)
            throw OverflowError("Gamma(x,z): magnitude exceeds representable range");
    }
    return {value, base.err_estimate + 4e-16 * shift, Method::weierstrass,
            base.terms_used};
}

Complex residue_at(Complex x, int m) {
    if (m < -1) throw DomainError("residue_at: m must be >= -1");
    long long k;
    if (near_integer(x, 1e-12 * std::max(1.0, std::abs(x)), &k) && k <= 0)
        throw DomainError("residue_at: x must not be a nonpositive integer");

    if (m == -1) return 1.0 / gamma_classical(x);

    double fact = 1.0;
    for (int j = 2; j <= m + 1; ++j) fact *= double(j);
    const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m+1}
    return sign * pochhammer(x, 2 * m + 1) /
           (fact * gamma_classical(x + double(2 * m + 1)));
}

double half_integer_value(int k, int l) {
    if (k < 0 || l < 0 || k + l < 1)
        throw DomainError("half_integer_value: need k,l >= 0 and k+l >= 1");

    auto fact = [](int n) {
        double f = 1.0;
        for (int j = 2; j <= n; ++j) f *= double(j);
        return f;
    };
    const double sqrt_pi = std::sqrt(kPi);
    const double a = 2.0 / (sqrt_pi * double(2 * k - 1));
    const double b = fact(2 * l + 2) / (std::pow(-4.0, l + 1) * fact(l + 1));
    const double c =
        fact(k + l - 1) / pochhammer(Complex(-double(l) - 0.5, 0.0), k + l).real();
    return a * b * c;
}

double gaussian_norm(int n) {
    if (n < 0) throw DomainError("gaussian_norm: n must be >= 0");
    const double base = std::exp(kPi) / (10.0 * (std::exp(2.0 * kPi) + 1.0));
    double value = base;
    for (int j = 0; j < n; ++j) {
        // step (x,z) -> (x+1,z+1) at x = z = j+i multiplies Gamma by
        // (z+x-1)(z+x)/x; the squared modulus picks up |.|^2.
        const Complex w(double(j), 1.0);
        const Complex mult = (2.0 * w - 1.0) * (2.0 * w) / w;
        value *= std::norm(mult);
    }
    return value;
}

double gaussian_norm_closed_formula(int n) {
    if (n < 0) throw DomainError("gaussian_norm_closed_formula: n must be >= 0");
    const double base = std::exp(kPi) / (10.0 * (std::exp(2.0 * kPi) + 1.0));
    double num = 5.0, den = 1.0;
    for (int k = 0; k <= 2 * n - 2; ++k) num *= 4.0 + double(k) * double(k);
    for (int k = 0; k <= n - 1; ++k) den *= 1.0 + double(k) * double(k);
    return num / den * base;
}

}  // namespace bigamma
