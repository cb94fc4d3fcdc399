#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bigamma/gamma2.hpp"
#include "bigamma/numeric_util.hpp"
#include "bigamma/special.hpp"

using namespace bigamma;

namespace {

const TruncationPolicy kPol{};

double rel(Complex a, Complex b) {
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

Complex random_complex(std::mt19937_64& rng, double box) {
    return {(2.0 * uniform01(rng) - 1.0) * box, (2.0 * uniform01(rng) - 1.0) * box};
}

bool clean(Complex x, Complex z, double margin = 0.1) {
    const Complex w = z + x;
    return std::abs(x - std::min(0.0, std::round(x.real()))) > margin &&
           std::abs(w - std::min(1.0, std::round(w.real()))) > margin;
}

// Simpson quadrature for the raw sawtooth integrand on one period.
double simpson_p_over(double z, int panels) {
    auto f = [z](double t) { return (t - 0.5) / (z + t); };
    const double h = 1.0 / panels;
    double acc = f(0.0) + f(1.0);
    for (int i = 1; i < panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(i * h);
    return acc * h / 3.0;
}

}  // namespace

TEST_CASE("classify") {
    CHECK(classify(1.0, 5.0).z_in_Sx);
    CHECK(!classify(1.0, 5.0).pole_index.has_value());

    const auto at_zero = classify(1.0, 0.0);
    CHECK(!at_zero.z_in_Sx);
    CHECK(at_zero.pole_index.value() == -1);

    const auto at_neg = classify(2.5, -2.5);
    CHECK(at_neg.pole_index.value() == 0);

    const auto deeper = classify(Complex(0.5, 0.5), Complex(-3.5, -0.5));
    CHECK(deeper.pole_index.value() == 3);

    CHECK(!classify(-2.0, 0.7).x_ok);
    CHECK(classify(-2.0, 0.7).is_limit_zero_case);
    CHECK(!classify(-2.0, 3.0).is_limit_zero_case);  // z in N0
    CHECK(classify(-2.3, 0.7).x_ok);
}

TEST_CASE("gamma_weierstrass special values") {
    CHECK(rel(gamma_weierstrass(2.7, 1.0, kPol).value, 1.0) <= 1e-10);
    CHECK(rel(gamma_weierstrass(0.5, 0.0, kPol).value, -2.0) <= 1e-10);
    CHECK(rel(gamma_weierstrass(3.0, 4.0, kPol).value, 60.0) <= 1e-10);

    CHECK_THROWS_AS(gamma_weierstrass(-1.0, 0.5, kPol), DomainError);
    try {
        gamma_weierstrass(2.5, -2.5, kPol);
        FAIL("expected PoleError");
    } catch (const PoleError& e) {
        CHECK(e.pole_index == 0);
        CHECK(e.has_residue);
        // residue at m=0 is -1/Gamma(x)
        CHECK(std::abs(e.residue - Complex(-0.75225277806367505, 0)) <= 1e-12);
        CHECK(std::abs(e.residue + 1.0 / gamma_classical(2.5)) <= 1e-14);
    }
}

TEST_CASE("gamma_euler_limit") {
    CHECK(rel(gamma_euler_limit(1.0, 5.0, kPol).value, 24.0) <= 1e-10);
    CHECK(rel(gamma_euler_limit(2.0, 0.5, kPol).value, 0.88622692545275801) <= 1e-10);
    CHECK(rel(gamma_euler_limit(1.5, 1.5, kPol).value, 1.1283791670955126) <= 1e-10);

    std::mt19937_64 rng(31);
    int tested = 0;
    while (tested < 25) {
        const Complex x = random_complex(rng, 3.0);
        const Complex z = random_complex(rng, 3.0);
        if (!clean(x, z, 0.15)) continue;
        ++tested;
        const EvalResult a = gamma_euler_limit(x, z, kPol);
        const EvalResult b = gamma_weierstrass(x, z, kPol);
        const double combined = (a.err_estimate + b.err_estimate + 1e-11) *
                                std::max(1.0, std::abs(b.value));
        CHECK(std::abs(a.value - b.value) <= combined);
    }
}

TEST_CASE("gamma_euler_product") {
    CHECK(rel(gamma_euler_product(1.0, 3.0, kPol).value, 2.0) <= 1e-10);
    CHECK(rel(gamma_euler_product(2.7, 1.0, kPol).value, 1.0) <= 1e-10);
    CHECK(rel(gamma_euler_product(0.8, 2.2, kPol).value,
              gamma_weierstrass(0.8, 2.2, kPol).value) <= 1e-9);
    CHECK_THROWS_AS(gamma_euler_product(1.3, -1.3, kPol), PoleError);

    std::mt19937_64 rng(37);
    int tested = 0;
    while (tested < 25) {
        const Complex x = random_complex(rng, 4.0);
        const Complex z = random_complex(rng, 4.0);
        if (!clean(x, z, 0.15) || std::abs(z + x) < 0.15) continue;
        ++tested;
        CHECK(rel(gamma_euler_product(x, z, kPol).value,
                  gamma_weierstrass(x, z, kPol).value) <= 1e-9);
    }
}

TEST_CASE("binet integral") {
    // single interval: int_0^1 P(t)/(1+t) dt = 1 - (3/2) ln 2 = I(1) - I(2)
    const double single = 1.0 - 1.5 * std::log(2.0);
    CHECK(std::abs(single - (-0.039720770839917964)) <= 1e-15);
    CHECK(std::abs(binet_integral(1.0, kPol) - binet_integral(2.0, kPol) - single) <=
          1e-13);
    // quadrature oracle on the raw integrand
    CHECK(std::abs(simpson_p_over(1.0, 4096) - single) <= 1e-10);

    // I(1) = (1/2) log(2 pi) - 1
    CHECK(std::abs(binet_integral(1.0, kPol) - (-0.081061466795327258)) <= 1e-13);

    // classical-gamma oracle: I(z) = (z-1/2)log z - z + log(2pi)/2 - lgamma(z)
    for (double z : {0.5, 1.0, 2.0, 3.7, 10.0, 41.5}) {
        const double oracle =
            (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) - std::lgamma(z);
        CHECK(std::abs(binet_integral(z, kPol) - oracle) <= 1e-12);
    }

    CHECK(std::fabs(binet_integral(1e6, kPol)) <= 1e-7);
    CHECK_THROWS_AS(binet_integral(0.0, kPol), DomainError);
    CHECK_THROWS_AS(binet_integral(-1.0, kPol), DomainError);
}

TEST_CASE("stirling log formula is exact") {
    CHECK(std::abs(gamma_stirling_log(1.0, 1.0, kPol).log_gamma()) <= 1e-10);
    CHECK(std::abs(gamma_stirling_log(3.0, 4.0, kPol).log_gamma() - std::log(60.0)) <=
          1e-10);

    const StirlingParts p = gamma_stirling_log(7.3, 2.9, kPol);
    const Complex g = gamma_weierstrass(7.3, 2.9, kPol).value;
    CHECK(std::abs(p.log_gamma() - std::log(std::abs(g))) <= 1e-9);

    std::mt19937_64 rng(43);
    for (int i = 0; i < 30; ++i) {
        const double x = 0.3 + 12.0 * uniform01(rng);
        const double z = 0.3 + 12.0 * uniform01(rng);
        if (z + x - 1.0 <= 0.1) continue;
        const StirlingParts parts = gamma_stirling_log(x, z, kPol);
        const Complex gw = gamma_weierstrass(x, z, kPol).value;
        CHECK(std::abs(parts.log_gamma() - std::log(std::abs(gw))) <=
              1e-9 * std::max(1.0, std::abs(parts.log_gamma())));
    }
    CHECK_THROWS_AS(gamma_stirling_log(-1.0, 2.0, kPol), DomainError);
    CHECK_THROWS_AS(gamma_stirling_log(0.3, 0.3, kPol), DomainError);
}

TEST_CASE("gamma_xz dispatcher") {
    CHECK(rel(gamma_xz(1.0, 0.5, kPol).value, 1.7724538509055160) <= 1e-11);
    CHECK(rel(gamma_xz(4.0, 1.0, kPol).value, 1.0) <= 1e-10);
    CHECK(rel(gamma_xz(2.5, -3.0, kPol).value, 1.7777777777777778) <= 1e-10);

    // large real-positive arguments ride the exact log formula
    const EvalResult big = gamma_xz(60.0, 3.0, kPol);
    CHECK(big.method == Method::stirling);
    CHECK(rel(big.value, gamma_weierstrass(60.0, 3.0, kPol).value) <= 1e-9);

    const EvalResult shifted = gamma_xz(Complex(0.3, 0.2), Complex(-4.6, 0.4), kPol);
    CHECK(shifted.method == Method::weierstrass);
    // against the functional equation applied by hand
    Complex ref = gamma_weierstrass(Complex(0.3, 0.2), Complex(1.4, 0.4), kPol).value;
    for (int j = 5; j >= 0; --j) ref /= Complex(0.3, 0.2) + Complex(-4.6, 0.4) - 1.0 + double(j);
    CHECK(rel(shifted.value, ref) <= 1e-9);

    CHECK_THROWS_AS(gamma_xz(-3.0, 0.7, kPol), DomainError);
    CHECK_THROWS_AS(gamma_xz(1.0, -2.0, kPol), PoleError);
}

TEST_CASE("functional equations on a seeded cloud") {
    std::mt19937_64 rng(47);
    int tested = 0;
    while (tested < 60) {
        const Complex x = random_complex(rng, 6.0);
        const Complex z = random_complex(rng, 6.0);
        if (std::abs(x) < 0.1 || !clean(x, z) || !clean(x, z + 1.0) ||
            !clean(x + 1.0, z) || !clean(x + 1.0, z + 1.0))
            continue;
        ++tested;
        const Complex g = gamma_xz(x, z, kPol).value;
        CHECK(rel(gamma_xz(x, z + 1.0, kPol).value, (z + x - 1.0) * g) <= 1e-9);
        CHECK(rel(gamma_xz(x + 1.0, z, kPol).value, (z + x - 1.0) / x * g) <= 1e-9);
        CHECK(rel(gamma_xz(x + 1.0, z + 1.0, kPol).value,
                  (z + x - 1.0) * (z + x) / x * g) <= 1e-9);
    }
}

TEST_CASE("conjugation symmetry") {
    std::mt19937_64 rng(53);
    int tested = 0;
    while (tested < 40) {
        const Complex x = random_complex(rng, 5.0);
        const Complex z = random_complex(rng, 5.0);
        if (!clean(x, z)) continue;
        ++tested;
        const Complex a = gamma_xz(std::conj(x), std::conj(z), kPol).value;
        const Complex b = std::conj(gamma_xz(x, z, kPol).value);
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("vanishing limit at nonpositive integer x") {
    for (int n = 0; n <= 2; ++n) {
        const Complex z(0.7, 0.0);
        const double r2 = std::abs(gamma_xz(-double(n) + 1e-3, z, kPol).value) / 1e-3;
        const double r3 = std::abs(gamma_xz(-double(n) + 1e-4, z, kPol).value) / 1e-4;
        CHECK(std::fabs(r3 / r2 - 1.0) <= 0.02);  // |Gamma| ~ C |eps|
        CHECK(std::abs(gamma_xz(-double(n) + 1e-4, z, kPol).value) <= 2.0 * r2 * 1e-4);
    }
}

TEST_CASE("residues") {
    // m = -1 reduces to 1/Gamma(x)
    for (Complex x : {Complex(2.5, 0), Complex(0.7, 0.2), Complex(1.0, 0)}) {
        CHECK(std::abs(residue_at(x, -1) - 1.0 / gamma_classical(x)) <= 1e-13);
    }
    // classical table at x = 1: (-1)^{m+1}/(m+1)!
    double fact = 1.0;
    for (int m = -1; m <= 3; ++m) {
        if (m >= 0) fact *= double(m + 1);
        const double expected = ((m + 1) % 2 ? -1.0 : 1.0) / (m >= 0 ? fact : 1.0);
        CHECK(std::abs(residue_at(1.0, m) - expected) <= 1e-12 * std::fabs(expected));
    }
    CHECK(std::abs(residue_at(2.5, 1) - 0.37612638903183752) <= 1e-12);
    CHECK_THROWS_AS(residue_at(0.0, 0), DomainError);
    CHECK_THROWS_AS(residue_at(-2.0, 1), DomainError);

    // numerical limit (z+x+m) Gamma(x,z) via extrapolation over 4 radii
    for (Complex x : {Complex(1.3, 0), Complex(0.7, 0.2)}) {
        for (int m = -1; m <= 2; ++m) {
            const Complex dir = std::exp(Complex(0, 0.7));
            std::vector<double> eps = {1e-2, 1e-3, 1e-4, 1e-5};
            std::vector<Complex> vals;
            for (double e : eps) {
                const Complex w = e * dir;
                vals.push_back(w * gamma_xz(x, -(x + double(m)) + w, kPol).value);
            }
            for (size_t mm = 1; mm < vals.size(); ++mm)
                for (size_t i = vals.size() - 1; i >= mm; --i) {
                    vals[i] = (eps[i - mm] * vals[i] - eps[i] * vals[i - 1]) /
                              (eps[i - mm] - eps[i]);
                    if (i == mm) break;
                }
            CHECK(std::abs(vals.back() - residue_at(x, m)) <=
                  1e-8 * std::max(1.0, std::abs(residue_at(x, m))));
        }
    }
}

TEST_CASE("half-integer closed form") {
    CHECK(std::abs(half_integer_value(1, 1) - 1.1283791670955126) <= 1e-13);
    CHECK(std::abs(half_integer_value(1, 0) - 1.1283791670955126) <= 1e-13);
    CHECK(std::abs(half_integer_value(0, 1) - 0.56418958354775629) <= 1e-13);
    for (int k = 0; k <= 4; ++k)
        for (int l = 0; l <= 4; ++l) {
            if (k + l < 1) continue;
            const double closed = half_integer_value(k, l);
            const Complex direct =
                gamma_xz(Complex(double(2 * k + 1) / 2, 0),
                         Complex(double(2 * l + 1) / 2, 0), kPol)
                    .value;
            CHECK(std::abs(direct - closed) <= 1e-9 * std::max(1.0, std::fabs(closed)));
        }
    CHECK_THROWS_AS(half_integer_value(0, 0), DomainError);
    CHECK_THROWS_AS(half_integer_value(-1, 2), DomainError);
}

TEST_CASE("gaussian norms") {
    const double base = 0.0043133369167027207;
    CHECK(std::abs(gaussian_norm(0) - base) <= 1e-15);

    const Complex g = gamma_weierstrass(Complex(0, 1), Complex(0, 1), kPol).value;
    CHECK(std::abs(std::norm(g) / base - 1.0) <= 1e-10);

    CHECK(std::abs(gaussian_norm(1) - 0.086266738334054415) <= 1e-13);
    CHECK(std::abs(gaussian_norm(2) - 1.7253347666810883) <= 1e-12);
    CHECK(std::abs(gaussian_norm(3) - 89.717407867416591) <= 1e-10);

    // conjugate symmetry |Gamma(n-i,n-i)|^2 = |Gamma(n+i,n+i)|^2
    for (int n = 0; n <= 2; ++n) {
        const Complex xp(double(n), 1.0), xm(double(n), -1.0);
        const double a = std::norm(gamma_weierstrass(xp, xp, kPol).value);
        const double b = std::norm(gamma_weierstrass(xm, xm, kPol).value);
        CHECK(std::fabs(a / b - 1.0) <= 1e-12);
    }

    // closed product formula: matches for n = 1..3, off by 5x at n = 0
    for (int n = 1; n <= 3; ++n)
        CHECK(std::fabs(gaussian_norm_closed_formula(n) / gaussian_norm(n) - 1.0) <=
              1e-12);
    CHECK(std::fabs(gaussian_norm_closed_formula(0) / gaussian_norm(0) - 5.0) <= 1e-12);
}

TEST_CASE("dispatcher err honesty under doubling") {
    std::mt19937_64 rng(59);
    TruncationPolicy doubled = kPol;
    doubled.max_terms *= 2;
    int tested = 0;
    while (tested < 50) {
        const Complex x = random_complex(rng, 5.0);
        const Complex z = random_complex(rng, 5.0);
        if (!clean(x, z)) continue;
        ++tested;
        const EvalResult a = gamma_xz(x, z, kPol);
        const EvalResult b = gamma_xz(x, z, doubled);
        CHECK(std::abs(b.value - a.value) <=
              4.0 * a.err_estimate * std::max(std::abs(a.value), 1e-300));
    }
}
