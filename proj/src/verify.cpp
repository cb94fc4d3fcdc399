#include "bigamma/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "bigamma/gamma2.hpp"
#include "bigamma/numeric_util.hpp"
#include "bigamma/product.hpp"
#include "bigamma/series.hpp"
#include "bigamma/special.hpp"

namespace bigamma {

namespace {

// ---------------------------------------------------------------------------
// grid machinery

double dist_to_int(Complex v) {
    return std::abs(v - std::round(v.real()));
}

double dist_to_nonpositive_int(Complex v) {
    return std::abs(v - std::min(0.0, std::round(v.real())));
}

// distance of z to the pole lattice z = -(x+m), m >= -1, i.e. of w = z+x to
// the integers <= 1
double dist_to_pole_lattice(Complex x, Complex z) {
    const Complex w = z + x;
    return std::abs(w - std::min(1.0, std::round(w.real())));
}

constexpr double kMargin = 0.1;

bool clean_point(Complex x, Complex z, double margin = kMargin) {
    return dist_to_nonpositive_int(x) > margin &&
           dist_to_pole_lattice(x, z) > margin;
}

class Sampler {
  public:
    Sampler(std::uint64_t seed, const std::string& id) {
        std::uint64_t h = 1469598103934665603ull;
        for (char c : id) h = (h ^ std::uint64_t(c)) * 1099511628211ull;
        rng_.seed(seed ^ h);
    }
    double u() { return uniform01(rng_); }
    double in(double lo, double hi) { return lo + (hi - lo) * u(); }
    Complex box(double half_width) {
        const double re = in(-half_width, half_width);
        const double im = in(-half_width, half_width);
        return {re, im};
    }
    template <typename Pred>
    Complex box_where(double half_width, Pred&& pred) {
        for (int tries = 0; tries < 20000; ++tries) {
            Complex v = box(half_width);
            if (pred(v)) return v;
        }
        throw DomainError("grid sampler: predicate rejected every candidate");
    }

  private:
    std::mt19937_64 rng_;
};

std::string grid_spec(std::uint64_t seed, int n, const char* extra = "") {
    std::ostringstream os;
    os << "seed=" << seed << " points=" << n;
    if (*extra) os << ' ' << extra;
    return os.str();
}

void finalize(IdentityReport& report, double tolerance) {
    report.max_residual = 0.0;
    for (const auto& pr : report.residuals)
        report.max_residual = std::max(report.max_residual, pr.residual);
    report.pass = report.max_residual <= tolerance;
}

// Neville extrapolation of (eps_j, v_j) to eps = 0.
Complex neville_to_zero(const std::vector<double>& eps, std::vector<Complex> v) {
    const size_t n = v.size();
    for (size_t m = 1; m < n; ++m)
        for (size_t i = n - 1; i >= m; --i) {
            v[i] = (eps[i - m] * v[i] - eps[i] * v[i - 1]) / (eps[i - m] - eps[i]);
            if (i == m) break;
        }
    return v[n - 1];
}

// ---------------------------------------------------------------------------
// per-identity runners

using Runner = std::function<IdentityReport(const IdentityDescriptor&, std::uint64_t,
                                            int, const TruncationPolicy&)>;

IdentityReport grid_report(const IdentityDescriptor& d, std::uint64_t seed, int n,
                           const std::function<PointResidual(Sampler&)>& one) {
    IdentityReport report;
    report.id = d.id;
    report.grid_spec = grid_spec(seed, n);
    Sampler s(seed, d.id);
    for (int i = 0; i < n; ++i) report.residuals.push_back(one(s));
    finalize(report, d.tolerance);
    return report;
}

IdentityReport run_gamma_rec(const IdentityDescriptor& d, std::uint64_t seed, int n,
                             const TruncationPolicy& pol) {
    return grid_report(d, seed, n, [&](Sampler& s) {
        const Complex x = s.box_where(8.0, [](Complex v) {
            return dist_to_nonpositive_int(v) > kMargin && std::abs(v) > kMargin &&
                   dist_to_nonpositive_int(v + 1.0) > kMargin;
        });
        const Complex lhs = euler_gamma_x(x + 1.0, pol).value;
        const Complex rhs = euler_gamma_x(x, pol).value - 1.0 / x;
        return PointResidual{x, 0.0, rel_residual(lhs, rhs)};
    });
}

IdentityReport run_gamma_psi(const IdentityDescriptor& d, std::uint64_t seed, int n,
                             const TruncationPolicy& pol) {
    return grid_report(d, seed, n, [&](Sampler& s) {
        const Complex x(s.in(0.05, 10.0), s.in(-10.0, 10.0));
        const Complex g = euler_gamma_x(x, pol).value;
        const Complex psi = digamma(x);
        const double res = std::abs(g + psi) / std::max(1.0, std::abs(psi));
        return PointResidual{x, 0.0, res};
    });
}

IdentityReport run_g_shift_z(const IdentityDescriptor& d, std::uint64_t seed, int n,
                             const TruncationPolicy& pol) {
    return grid_report(d, seed, n, [&](Sampler& s) {
        const Complex x = s.box_where(
            5.0, [](Complex v) { return dist_to_nonpositive_int(v) > kMargin; });
        const Complex z = s.box(5.0);
        return PointResidual{x, z, g_shift_z_residual(x, z, pol)};
    });
}

IdentityReport run_g_shift_x(const IdentityDescriptor& d, std::uint64_t seed, int n,
                             const TruncationPolicy& pol) {
    return grid_report(d, seed, n, [&](Sampler& s) {
        const Complex x = s.box_where(5.0, [](Complex v) {
            return dist_to_nonpositive_int(v) > kMargin &&
                   dist_to_nonpositive_int(v - 1.0) > kMargin &&
                   std::abs(v - 1.0) > kMargin;
        });
        const Complex z = s.box(5.0);
        return PointResidual{x, z, g_shift_x_residual(x, z, pol)};
    });
}

IdentityReport run_g_sin(const IdentityDescriptor& d, std::uint64_t seed, int n,
                         const TruncationPolicy& pol, CotVariant variant,
                         bool adjudicated) {
    IdentityReport report = grid_report(d, seed, n, [&](Sampler& s) {
        const Complex x = s.box_where(
            2.5, [](Complex v) { return dist_to_int(v) > kMargin; });
        const Complex z = s.box(2.5);
        return PointResidual{x, z, g_sin_residual(x, z, pol, variant)};
    });
    if (adjudicated) {
        // literal entry: aggregate pass follows the pi*cot reading
        IdentityReport proof = grid_report(d, seed, n, [&](Sampler& s) {
            const Complex x = s.box_where(
                2.5, [](Complex v) { return dist_to_int(v) > kMargin; });
            const Complex z = s.box(2.5);
            return PointResidual{x, z, g_sin_residual(x, z, pol, CotVariant::pi_cot)};
        });
        std::ostringstream os;
        os << "literal z*cot(pi x) reading: max residual " << report.max_residual
           << "; pi*z*cot(pi x) reading: max residual " << proof.max_residual
           << "; the pi-variant is the numerically consistent one. "
              "Aggregate pass tracks the pi-variant.";
        report.variant_notes = os.str();
        report.pass = proof.max_residual <= d.tolerance;
    }
    return report;
}

IdentityReport run_sin2(const IdentityDescriptor& d, std::uint64_t seed, int n,
                        const TruncationPolicy& pol) {
    return grid_report(d, seed, n, [&](Sampler& s) {
        const Complex x = s.box_where(
            2.5, [](Complex v) { return dist_to_int(v) > kMargin; });
        const Complex z = s.box_where(2.5, [&](Complex v) {
            return std::abs(v * v - x * x) > 0.05;
        });
        return PointResidual{x, z, sin2_product_residual(x, z, pol)};
    });
}

IdentityReport run_fe_z(const IdentityDescriptor& d, std::uint64_t seed, int n,
                        const TruncationPolicy& pol) {
    return grid_report(d, seed, n, [&](Sampler& s) {
        Complex x, z;
        do {
            x = s.box(6.0);
            z = s.box(6.0);
        } while (!clean_point(x, z) || !clean_point(x, z + 1.0));
        const Complex lhs = gamma_xz(x, z + 1.0, pol).value;
        const Complex rhs = (z + x - 1.0) * gamma_xz(x, z, pol).value;
        return PointResidual{x, z, rel_residual(lhs, rhs)};
    });
}

IdentityReport run_fe_x(const IdentityDescriptor& d, std::uint64_t seed, int n,
                        const TruncationPolicy& pol) {
    return grid_report(d, seed, n, [&](Sampler& s) {
        Complex x, z;
        do {
            x = s.box(6.0);
            z = s.box(6.0);
        } while (std::abs(x) <= kMargin || !clean_point(x, z) ||
                 !clean_point(x + 1.0, z));
        const Complex lhs = gamma_xz(x + 1.0, z, pol).value;
        const Complex rhs = (z + x - 1.0) / x * gamma_xz(x, z, pol).value;
        return PointResidual{x, z, rel_residual(lhs, rhs)};
    });
}

IdentityReport run_fe_xz(const IdentityDescriptor& d, std::uint64_t seed, int n,
                         const TruncationPolicy& pol) {
    return grid_report(d, seed, n, [&](Sampler& s) {
        Complex x, z;
        do {
            x = s.box(6.0);
            z = s.box(6.0);
        } while (std::abs(x) <= kMargin || !clean_point(x, z) ||
                 !clean_point(x + 1.0, z + 1.0));
        const Complex lhs = gamma_xz(x + 1.0, z + 1.0, pol).value;
        const Complex rhs = (z + x - 1.0) * (z + x) / x * gamma_xz(x, z, pol).value;
        return PointResidual{x, z, rel_residual(lhs, rhs)};
    });
}

IdentityReport run_special_int(const IdentityDescriptor& d, std::uint64_t seed, int n,
                               const TruncationPolicy& pol) {
    IdentityReport report;
    report.id = d.id;
    const int n_x = std::max(1, n / 10);  // default 200 -> 20 anchors
    report.grid_spec = grid_spec(seed, n_x, "checks=a..e n=2..6");
    Sampler s(seed, d.id);
    for (int i = 0; i < n_x; ++i) {
        const Complex x = [&] {
            for (;;) {
                Complex v(s.in(0.2, 6.0), s.in(-3.0, 3.0));
                if (dist_to_int(v) > kMargin) return v;
            }
        }();
        // (a) Gamma(x,1) = 1
        report.residuals.push_back(
            {x, 1.0, rel_residual(gamma_xz(x, 1.0, pol).value, 1.0)});
        // (b) Gamma(x,0) = 1/(x-1)
        report.residuals.push_back(
            {x, 0.0, rel_residual(gamma_xz(x, 0.0, pol).value, 1.0 / (x - 1.0))});
        for (int nn = 2; nn <= 6; ++nn) {
            // (c) Gamma(x,n) = (x)_{n-1}
            report.residuals.push_back(
                {x, double(nn),
                 rel_residual(gamma_xz(x, double(nn), pol).value,
                              pochhammer(x, nn - 1))});
            // (d) Gamma(x,-n) = 1/(x-n-1)_{n+1}
            report.residuals.push_back(
                {x, -double(nn),
                 rel_residual(gamma_xz(x, -double(nn), pol).value,
                              1.0 / pochhammer(x - double(nn) - 1.0, nn + 1))});
            // (e) Gamma(n,z) = ((z)_{n-1}/(n-1)!) Gamma(z)
            const Complex z = [&] {
                for (;;) {
                    Complex v = s.box(4.0);
                    if (clean_point(Complex(double(nn), 0.0), v) &&
                        dist_to_nonpositive_int(v) > kMargin)
                        return v;
                }
            }();
            double fact = 1.0;
            for (int j = 2; j < nn; ++j) fact *= double(j);
            const Complex rhs =
                pochhammer(z, nn - 1) / fact * gamma_classical(z);
            report.residuals.push_back(
                {Complex(double(nn), 0.0), z,
                 rel_residual(gamma_xz(Complex(double(nn), 0.0), z, pol).value, rhs)});
        }
    }
    finalize(report, d.tolerance);
    return report;
}

IdentityReport run_classical_limit(const IdentityDescriptor& d, std::uint64_t seed,
                                   int n, const TruncationPolicy& pol) {
    IdentityReport report;
    report.id = d.id;
    report.grid_spec = grid_spec(seed, n, "x=1 fixed");
    Sampler s(seed, d.id);
    std::vector<Complex> pts = {{0.5, 0.0}, {1.0, 0.0}, {1.5, 0.0}, {2.5, 0.0},
                                {4.0, 0.0}, {0.5, 0.5}, {2.0, -1.0}};
    while (int(pts.size()) < n) {
        const Complex z = s.box(5.0);
        if (clean_point(Complex(1.0, 0.0), z)) pts.push_back(z);
    }
    for (const Complex& z : pts) {
        const Complex ref = gamma_classical(z);
        const double res = std::abs(gamma_xz(Complex(1.0, 0.0), z, pol).value / ref - 1.0);
        report.residuals.push_back({Complex(1.0, 0.0), z, res});
    }
    finalize(report, d.tolerance);
    return report;
}

IdentityReport run_reflect_a(const IdentityDescriptor& d, std::uint64_t seed, int n,
                             const TruncationPolicy& pol) {
    return grid_report(d, seed, n, [&](Sampler& s) {
        Complex x, z;
        do {
            x = s.box(3.0);
            z = s.box(3.0);
        } while (dist_to_int(x) <= kMargin || dist_to_int(z - x) <= kMargin ||
                 !clean_point(x, 1.0 - z) || !clean_point(1.0 - x, z));
        const Complex prod =
            gamma_xz(x, 1.0 - z, pol).value * gamma_xz(1.0 - x, z, pol).value;
        const Complex lhs = prod * (z - x) * std::sin(kPi * (z - x));
        const Complex sx = std::sin(kPi * x);
        const double res =
            std::abs(lhs + sx) / std::max({1.0, std::abs(lhs), std::abs(sx)});
        return PointResidual{x, z, res};
    });
}

double reflect_b_residual(Complex x, Complex z, const TruncationPolicy& pol,
                          bool literal) {
    // proof form: Gamma(-x,z)Gamma(x,-z) ((z-x)^3-(z-x)) sin pi(z-x) = -x sin pi x
    // literal form: Gamma(x,z)Gamma(-x,-z) ((z+x)^3-(z+x)) sin pi(z+x) = -x sin pi x
    const Complex w = literal ? z + x : z - x;
    const Complex prod =
        literal ? gamma_xz(x, z, pol).value * gamma_xz(-x, -z, pol).value
                : gamma_xz(-x, z, pol).value * gamma_xz(x, -z, pol).value;
    const Complex lhs = prod * (w * w * w - w) * std::sin(kPi * w);
    const Complex rhs = -x * std::sin(kPi * x);
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

IdentityReport run_reflect_b(const IdentityDescriptor& d, std::uint64_t seed, int n,
                             const TruncationPolicy& pol, bool literal) {
    auto sample = [&](Sampler& s, bool lit) {
        Complex x, z;
        do {
            x = s.box(3.0);
            z = s.box(3.0);
        } while (dist_to_int(x) <= kMargin ||
                 dist_to_int(lit ? z + x : z - x) <= kMargin ||
                 std::abs((lit ? z + x : z - x) - 1.0) <= kMargin ||
                 std::abs((lit ? z + x : z - x) + 1.0) <= kMargin ||
                 (lit ? (!clean_point(x, z) || !clean_point(-x, -z))
                      : (!clean_point(-x, z) || !clean_point(x, -z))));
        return std::pair<Complex, Complex>(x, z);
    };
    IdentityReport report = grid_report(d, seed, n, [&](Sampler& s) {
        auto [x, z] = sample(s, literal);
        return PointResidual{x, z, reflect_b_residual(x, z, pol, literal)};
    });
    if (literal) {
        IdentityReport proof = grid_report(d, seed, n, [&](Sampler& s) {
            auto [x, z] = sample(s, false);
            return PointResidual{x, z, reflect_b_residual(x, z, pol, false)};
        });
        std::ostringstream os;
        os << "stated form Gamma(x,z)Gamma(-x,-z) with (z+x): max residual "
           << report.max_residual
           << "; proof form Gamma(-x,z)Gamma(x,-z) with (z-x): max residual "
           << proof.max_residual
           << ". The two are the same identity under x -> -x; both hold. "
              "Aggregate pass tracks the proof form.";
        report.variant_notes = os.str();
        report.pass = proof.max_residual <= d.tolerance;
    }
    return report;
}

IdentityReport run_limit_neg(const IdentityDescriptor& d, std::uint64_t seed, int,
                             const TruncationPolicy& pol) {
    IdentityReport report;
    report.id = d.id;
    report.grid_spec = grid_spec(seed, 36, "n=0..2 x 3 z x 4 directions");
    const Complex zs[] = {{0.7, 0.0}, {2.3, 1.1}, {-3.6, 0.0}};
    const Complex dirs[] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0},
                            {0.70710678118654752, 0.70710678118654752}};
    for (int n = 0; n <= 2; ++n)
        for (const Complex& z : zs)
            for (const Complex& dir : dirs) {
                auto scaled = [&](double eps) {
                    const Complex x = -double(n) + eps * dir;
                    return std::abs(gamma_xz(x, z, pol).value) / eps;
                };
                const double r_mid = scaled(1e-3);
                const double r_small = scaled(1e-4);
                report.residuals.push_back(
                    {-double(n) + 1e-4 * dir, z, std::fabs(r_small / r_mid - 1.0)});
            }
    finalize(report, d.tolerance);
    return report;
}

IdentityReport run_norm(const IdentityDescriptor& d, std::uint64_t seed, int,
                        const TruncationPolicy& pol) {
    IdentityReport report;
    report.id = d.id;
    report.grid_spec = grid_spec(seed, 10, "n=0..3");
    const double base = std::exp(kPi) / (10.0 * (std::exp(2.0 * kPi) + 1.0));
    const Complex i_unit(0.0, 1.0);
    for (int n = 0; n <= 3; ++n) {
        const Complex xn(double(n), 1.0);
        const Complex g = gamma_weierstrass(xn, xn, pol).value;
        const double direct = std::norm(g);
        const double recur = n == 0 ? base : gaussian_norm(n);
        report.residuals.push_back({xn, xn, std::fabs(direct / recur - 1.0)});
        // conjugate symmetry
        const Complex gc = gamma_weierstrass(std::conj(xn), std::conj(xn), pol).value;
        report.residuals.push_back(
            {std::conj(xn), std::conj(xn), std::fabs(std::norm(gc) / direct - 1.0)});
    }
    (void)i_unit;
    finalize(report, d.tolerance);
    return report;
}

IdentityReport run_norm_closed(const IdentityDescriptor& d, std::uint64_t seed, int,
                               const TruncationPolicy&) {
    IdentityReport report;
    report.id = d.id;
    report.grid_spec = grid_spec(seed, 3, "n=1..3");
    for (int n = 1; n <= 3; ++n) {
        const double rec = gaussian_norm(n);
        const double closed = gaussian_norm_closed_formula(n);
        report.residuals.push_back(
            {Complex(double(n), 1.0), Complex(double(n), 1.0),
             std::fabs(closed / rec - 1.0)});
    }
    std::ostringstream os;
    os << "closed product formula matches the recurrence for n=1..3; at n=0 the "
          "literal formula (empty products = 1) gives "
       << gaussian_norm_closed_formula(0) / gaussian_norm(0)
       << "x the base value, so the displayed leading factor 5 does not reduce "
          "to the base case. Recurrence path is authoritative.";
    report.variant_notes = os.str();
    finalize(report, d.tolerance);
    return report;
}

IdentityReport run_cross_method(const IdentityDescriptor& d, std::uint64_t seed, int n,
                                const TruncationPolicy& pol, bool use_product) {
    return grid_report(d, seed, n, [&](Sampler& s) {
        Complex x, z;
        do {
            x = s.box(4.0);
            z = s.box(4.0);
        } while (!clean_point(x, z, 0.15) ||
                 (use_product && std::abs(z + x) <= 0.15));
        const Complex ref = gamma_weierstrass(x, z, pol).value;
        const Complex alt = use_product ? gamma_euler_product(x, z, pol).value
                                        : gamma_euler_limit(x, z, pol).value;
        return PointResidual{x, z, rel_residual(alt, ref)};
    });
}

IdentityReport run_dup(const IdentityDescriptor& d, std::uint64_t seed, int n,
                       const TruncationPolicy& pol) {
    return grid_report(d, seed, n, [&](Sampler& s) {
        Complex x, z;
        do {
            x = s.box(4.0);
            z = s.box(4.0);
        } while (dist_to_nonpositive_int(x) <= kMargin ||
                 dist_to_nonpositive_int(x + z) <= kMargin ||
                 std::abs(x - 1.0) <= kMargin ||
                 std::abs(z + x - 1.0) <= kMargin || !clean_point(x, z) ||
                 !clean_point(x + z, -z));
        const Complex lhs = gamma_xz(x, z, pol).value *
                            gamma_xz(x + z, -z, pol).value * (x - 1.0) *
                            (z + x - 1.0);
        return PointResidual{x, z, std::abs(lhs - 1.0)};
    });
}

IdentityReport run_half_int(const IdentityDescriptor& d, std::uint64_t seed, int,
                            const TruncationPolicy& pol) {
    IdentityReport report;
    report.id = d.id;
    report.grid_spec = grid_spec(seed, 24, "k,l<=4 k+l>=1");
    for (int k = 0; k <= 4; ++k)
        for (int l = 0; l <= 4; ++l) {
            if (k + l < 1) continue;
            const Complex x(double(2 * k + 1) / 2.0, 0.0);
            const Complex z(double(2 * l + 1) / 2.0, 0.0);
            const double closed = half_integer_value(k, l);
            const Complex direct = gamma_xz(x, z, pol).value;
            report.residuals.push_back({x, z, rel_residual(direct, closed)});
        }
    finalize(report, d.tolerance);
    return report;
}

IdentityReport run_residue(const IdentityDescriptor& d, std::uint64_t seed, int,
                           const TruncationPolicy& pol) {
    IdentityReport report;
    report.id = d.id;
    report.grid_spec = grid_spec(seed, 16, "x in {1.3,2.5,0.7+0.2i,1} m=-1..2");
    const Complex xs[] = {{1.3, 0.0}, {2.5, 0.0}, {0.7, 0.2}, {1.0, 0.0}};
    const Complex dir = std::exp(Complex(0.0, 0.7));
    const std::vector<double> eps = {1e-2, 1e-3, 1e-4, 1e-5};
    for (const Complex& x : xs)
        for (int m = -1; m <= 2; ++m) {
            std::vector<Complex> vals;
            for (double e : eps) {
                const Complex w = e * dir;
                const Complex z = -(x + double(m)) + w;
                vals.push_back(w * gamma_xz(x, z, pol).value);
            }
            const Complex numeric = neville_to_zero(eps, vals);
            const Complex closed = residue_at(x, m);
            report.residuals.push_back(
                {x, -(x + double(m)), rel_residual(numeric, closed)});
        }
    finalize(report, d.tolerance);
    return report;
}

IdentityReport run_mult_const(const IdentityDescriptor& d, std::uint64_t seed, int n,
                              const TruncationPolicy& pol) {
    return grid_report(d, seed, std::max(1, n / 10), [&](Sampler& s) {
        auto ok_all = [&](Complex x, Complex z) {
            return clean_point(x, z) && clean_point(x, z + 0.5) &&
                   clean_point(2.0 * x - 1.0, 2.0 * z);
        };
        Complex x, z1, z2;
        do {
            x = Complex(s.in(0.3, 3.0), s.in(-1.5, 1.5));
            z1 = s.box(2.0);
            z2 = s.box(2.0);
        } while (dist_to_nonpositive_int(x) <= kMargin ||
                 dist_to_nonpositive_int(2.0 * x - 1.0) <= kMargin ||
                 !ok_all(x, z1) || !ok_all(x, z2));
        return PointResidual{x, z1, mult_const_check(x, z1, z2, pol)};
    });
}

IdentityReport run_gauss2(const IdentityDescriptor& d, std::uint64_t seed, int n,
                          const TruncationPolicy& pol) {
    return grid_report(d, seed, std::max(1, n / 4), [&](Sampler& s) {
        Complex x, z;
        auto all_clean = [&](Complex xx, Complex zz) {
            return clean_point(xx, zz) && clean_point(xx, zz + 0.5) &&
                   clean_point(1.0 - xx, zz) && clean_point(1.0 - xx, zz + 0.5) &&
                   clean_point(2.0 * xx - 1.0, 2.0 * zz) &&
                   clean_point(1.0 - 2.0 * xx, 2.0 * zz);
        };
        do {
            x = s.box(2.0);
            z = s.box(1.5);
        } while (dist_to_int(x) <= kMargin || std::abs(x - 0.5) <= kMargin ||
                 dist_to_int(2.0 * x) <= kMargin || !all_clean(x, z));
        return PointResidual{x, z, gauss2_check(x, z, pol)};
    });
}

IdentityReport run_stirling_exact(const IdentityDescriptor& d, std::uint64_t seed,
                                  int n, const TruncationPolicy& pol) {
    return grid_report(d, seed, std::max(1, n / 4), [&](Sampler& s) {
        double x, z;
        do {
            x = s.in(0.3, 15.0);
            z = s.in(0.3, 15.0);
        } while (!(z + x - 1.0 > 0.1));
        const StirlingParts parts = gamma_stirling_log(x, z, pol);
        const Complex g = gamma_weierstrass(Complex(x, 0), Complex(z, 0), pol).value;
        const double lhs = std::log(std::abs(g));
        const double res = std::fabs(lhs - parts.log_gamma()) /
                           std::max(1.0, std::fabs(lhs));
        return PointResidual{Complex(x, 0.0), Complex(z, 0.0), res};
    });
}

IdentityReport run_stirling_asympt(const IdentityDescriptor& d, std::uint64_t seed,
                                   int, const TruncationPolicy& pol) {
    IdentityReport report;
    report.id = d.id;
    report.grid_spec = grid_spec(seed, 4, "x in {10,20,40,80} z=2");
    std::vector<double> devs;
    for (double x : {10.0, 20.0, 40.0, 80.0}) {
        const double z = 2.0;
        const double main =
            (z + x - 1.5) * std::log(z + x - 1.0) - z + 1.0 - (x - 0.5) * std::log(x);
        const Complex g = gamma_weierstrass(Complex(x, 0), Complex(z, 0), pol).value;
        const double ratio = std::abs(g) / std::exp(main);
        devs.push_back(std::fabs(ratio - 1.0));
        report.residuals.push_back({Complex(x, 0.0), Complex(z, 0.0), devs.back()});
    }
    const bool decreasing = devs[0] > devs[1] && devs[1] > devs[2] && devs[2] > devs[3];
    finalize(report, d.tolerance);
    report.pass = report.pass && decreasing && devs[3] <= 0.013;
    std::ostringstream os;
    os << "|ratio-1| sequence:";
    for (double v : devs) os << ' ' << v;
    os << (decreasing ? " (monotone decreasing)" : " (NOT monotone)");
    os << ". For z -> infinity the correct asymptotic shape multiplies the main "
          "term by e^{I(x)}; an additive I(x) is dimensionally inconsistent with "
          "the exact log formula.";
    report.variant_notes = os.str();
    return report;
}

IdentityReport run_series_z(const IdentityDescriptor& d, std::uint64_t seed, int n,
                            const TruncationPolicy& pol) {
    const int order = 32;
    IdentityReport report = grid_report(d, seed, n, [&](Sampler& s) {
        Complex x, z;
        do {
            x = Complex(s.in(0.3, 4.0), s.in(-2.0, 2.0));
            z = s.box(0.9);
        } while (std::abs(z) > 0.4 * std::min(1.0, std::abs(x)) ||
                 !clean_point(x, z + 1.0));
        const Complex lhs = std::exp(log_series_in_z(x, z, order));
        const Complex rhs = gamma_xz(x, z + 1.0, pol).value;
        return PointResidual{x, z, std::abs(lhs / rhs - 1.0)};
    });
    // pinned acceptance point
    const Complex lhs = std::exp(log_series_in_z(2.0, 0.3, order));
    const Complex rhs = gamma_xz(2.0, 1.3, pol).value;
    report.residuals.push_back({2.0, 0.3, std::abs(lhs / rhs - 1.0)});
    finalize(report, d.tolerance);
    return report;
}

IdentityReport run_series_x(const IdentityDescriptor& d, std::uint64_t seed, int n,
                            const TruncationPolicy& pol) {
    const int order = 40;
    IdentityReport report = grid_report(d, seed, std::max(1, n / 8), [&](Sampler& s) {
        double x, z;
        do {
            x = s.in(0.7, 1.3);
            z = s.in(0.5, 3.0);
        } while (std::fabs(x - 1.0) > 0.4 * std::min(1.0, z + 1.0));
        const Complex lhs = std::exp(log_series_in_x(x, z, order));
        const Complex rhs = gamma_xz(Complex(x + 1.0, 0), Complex(z, 0), pol).value;
        return PointResidual{Complex(x, 0.0), Complex(z, 0.0),
                             std::abs(lhs / rhs - 1.0)};
    });
    const Complex lhs = std::exp(log_series_in_x(1.2, 1.5, order));
    const Complex rhs = gamma_xz(2.2, 1.5, pol).value;
    report.residuals.push_back({1.2, 1.5, std::abs(lhs / rhs - 1.0)});
    finalize(report, d.tolerance);
    return report;
}

// FD-vs-recursion comparison shared by the coefficient entries.
IdentityReport run_series_coeff(const IdentityDescriptor& d, std::uint64_t seed,
                                const TruncationPolicy& pol, bool in_z, bool literal) {
    IdentityReport report;
    report.id = d.id;
    const int max_m = 6;
    const std::vector<double> anchors =
        in_z ? std::vector<double>{1.0, 1.5, 2.0} : std::vector<double>{1.0, 1.5, 2.5};
    report.grid_spec = grid_spec(seed, int(anchors.size() * (max_m + 1)),
                                 in_z ? "anchors x in {1,1.5,2}" : "anchors z in {1,1.5,2.5}");
    double derived_max = 0.0;
    std::ostringstream first_div;
    for (double anchor : anchors) {
        std::function<Complex(double)> f;
        double radius;
        if (in_z) {
            f = [&pol, anchor](double t) {
                return gamma_xz(Complex(anchor, 0.0), Complex(1.0 + t, 0.0), pol).value;
            };
            radius = std::min(1.0, anchor);
        } else {
            f = [&pol, anchor](double t) {
                return gamma_xz(Complex(2.0 + t, 0.0), Complex(anchor, 0.0), pol).value;
            };
            radius = std::min(1.0, anchor + 1.0);
        }
        const auto fd = taylor_coeffs_fd(f, max_m, 0.35 * radius, 6);
        const SeriesExpansion tested =
            in_z ? coeffs_a(Complex(anchor, 0.0), max_m, literal)
                 : coeffs_b(Complex(anchor, 0.0), max_m, literal);
        const SeriesExpansion derived = in_z
                                            ? coeffs_a(Complex(anchor, 0.0), max_m, false)
                                            : coeffs_b(Complex(anchor, 0.0), max_m, false);
        for (int m = 0; m <= max_m; ++m) {
            const double res = std::abs(tested.coefficients[m] - fd[m]) /
                               std::max(1.0, std::abs(fd[m]));
            report.residuals.push_back(
                {Complex(anchor, 0.0), Complex(double(m), 0.0), res});
            const double dres = std::abs(derived.coefficients[m] - fd[m]) /
                                std::max(1.0, std::abs(fd[m]));
            derived_max = std::max(derived_max, dres);
            if (literal && res > d.tolerance && first_div.str().empty())
                first_div << "first divergence at anchor " << anchor << ", order " << m
                          << ": literal " << tested.coefficients[m].real() << " vs FD "
                          << fd[m].real();
        }
    }
    finalize(report, d.tolerance);
    if (literal) {
        std::ostringstream os;
        os << "paper-literal recursion max residual " << report.max_residual
           << " vs finite differences; derivative-matching form max residual "
           << derived_max << ". " << first_div.str()
           << ". Aggregate pass tracks the derivative-matching form.";
        if (!in_z)
            os << " The printed x-recursion also adds the constant series "
                  "sum_{n>=2} z/(n(n+z)) as a standalone term; the derivation "
                  "requires (1/m) b_{m-1} c(z) with c(z) = psi(z+1)+gamma-1.";
        report.variant_notes = os.str();
        report.pass = derived_max <= d.tolerance;
    }
    return report;
}

IdentityReport run_conj(const IdentityDescriptor& d, std::uint64_t seed, int n,
                        const TruncationPolicy& pol) {
    return grid_report(d, seed, n, [&](Sampler& s) {
        Complex x, z;
        do {
            x = s.box(5.0);
            z = s.box(5.0);
        } while (!clean_point(x, z));
        const Complex a = gamma_xz(std::conj(x), std::conj(z), pol).value;
        const Complex b = std::conj(gamma_xz(x, z, pol).value);
        return PointResidual{x, z, rel_residual(a, b)};
    });
}

struct Entry {
    IdentityDescriptor desc;
    Runner run;
};

const std::vector<Entry>& table() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> t;
        auto add = [&](IdentityDescriptor d, Runner r) {
            t.push_back({std::move(d), std::move(r)});
        };
        add({"GAMMA-REC", "gamma(x+1) = -1/x + gamma(x)", "x complex",
             "x, x+1 off the nonpositive integers; |x| > 0.1", 1e-10, 200},
            run_gamma_rec);
        add({"GAMMA-PSI", "gamma(x) = -psi(x)", "x complex", "Re(x) > 0", 1e-9, 200},
            run_gamma_psi);
        add({"G-SHIFT-Z", "G(x,z-1) = (z+x-1) e^{gamma(x)} G(x,z)", "x,z complex",
             "x off the nonpositive integers", 1e-9, 200},
            run_g_shift_z);
        add({"G-SHIFT-X", "G(x-1,z) = ((z+x-1)/(x-1)) e^{-z/(x-1)} G(x,z)",
             "x,z complex", "x, x-1 off the nonpositive integers", 1e-9, 200},
            run_g_shift_x);
        add({"G-SIN-literal",
             "G(x,-z)G(-x,z) = (z-x) sin pi(z-x)/(x sin pi x) e^{z cot(pi x)+z/x}",
             "x,z complex", "x not an integer", 1e-8, 100},
            [](const IdentityDescriptor& d, std::uint64_t s, int n,
               const TruncationPolicy& p) {
                return run_g_sin(d, s, n, p, CotVariant::cot, true);
            });
        add({"G-SIN-picot",
             "G(x,-z)G(-x,z) = (z-x) sin pi(z-x)/(x sin pi x) e^{pi z cot(pi x)+z/x}",
             "x,z complex", "x not an integer", 1e-8, 100},
            [](const IdentityDescriptor& d, std::uint64_t s, int n,
               const TruncationPolicy& p) {
                return run_g_sin(d, s, n, p, CotVariant::pi_cot, false);
            });
        add({"SIN2-PROD",
             "prod (1-z^2/(n+x)^2)(1-z^2/(n-x)^2) = (x/sin pi x)^2 (sin^2 pi z - "
             "sin^2 pi x)/(z^2-x^2)",
             "x,z complex", "x not an integer; z^2 != x^2", 1e-8, 100},
            run_sin2);
        add({"FE-z", "Gamma(x,z+1) = (z+x-1) Gamma(x,z)", "x,z complex",
             "points 0.1 away from poles", 1e-9, 200},
            run_fe_z);
        add({"FE-x", "Gamma(x+1,z) = ((z+x-1)/x) Gamma(x,z)", "x,z complex",
             "points 0.1 away from poles; |x| > 0.1", 1e-9, 200},
            run_fe_x);
        add({"FE-xz", "Gamma(x+1,z+1) = ((z+x-1)(z+x)/x) Gamma(x,z)", "x,z complex",
             "points 0.1 away from poles; |x| > 0.1", 1e-9, 200},
            run_fe_xz);
        add({"SPECIAL-INT",
             "Gamma(x,1)=1; Gamma(x,0)=1/(x-1); Gamma(x,n)=(x)_{n-1}; "
             "Gamma(x,-n)=1/(x-n-1)_{n+1}; Gamma(n,z)=((z)_{n-1}/(n-1)!)Gamma(z)",
             "x complex, n=2..6", "Re(x) > 0, x off-lattice", 1e-10, 200},
            run_special_int);
        add({"CLASSICAL-LIMIT", "Gamma(1,z) = Gamma(z)", "z complex",
             "z away from nonpositive integers", 1e-10, 30},
            run_classical_limit);
        add({"REFLECT-A",
             "Gamma(x,1-z)Gamma(1-x,z) = -sin pi x/((z-x) sin pi(z-x))",
             "x,z complex", "x not an integer; z-x away from integers", 1e-8, 100},
            run_reflect_a);
        add({"REFLECT-B-proof",
             "Gamma(-x,z)Gamma(x,-z) = -x sin pi x/(((z-x)^3-(z-x)) sin pi(z-x))",
             "x,z complex", "x not an integer; z-x away from {0,+-1}", 1e-8, 100},
            [](const IdentityDescriptor& d, std::uint64_t s, int n,
               const TruncationPolicy& p) { return run_reflect_b(d, s, n, p, false); });
        add({"REFLECT-B-literal",
             "Gamma(x,z)Gamma(-x,-z) = -x sin pi x/(((z+x)^3-(z+x)) sin pi(z+x))",
             "x,z complex", "x not an integer; z+x away from {0,+-1}", 1e-8, 100},
            [](const IdentityDescriptor& d, std::uint64_t s, int n,
               const TruncationPolicy& p) { return run_reflect_b(d, s, n, p, true); });
        add({"LIMIT-NEG", "Gamma(x,z) -> 0 linearly as x -> -n, z not in N0",
             "n=0..2, 3 z samples, 4 approach directions", "z not a nonnegative integer",
             0.02, 36},
            run_limit_neg);
        add({"NORM",
             "|Gamma(n+i,n+i)|^2 from |Gamma(i,i)|^2 = e^pi/(10(e^{2pi}+1)) via the "
             "(x+1,z+1) recurrence; conjugate symmetry",
             "n=0..3", "none", 1e-9, 8},
            run_norm);
        add({"NORM-CLOSED",
             "closed product formula 5 prod(4+k^2)/prod(1+k^2) x base vs recurrence",
             "n=1..3 (n=0 reported in notes)", "none", 1e-9, 3},
            run_norm_closed);
        add({"EULER-LIMIT", "lim n^z (x)_n/(z+x-1)_{n+1} agrees with the product path",
             "x,z complex", "points 0.15 away from poles", 1e-9, 60},
            [](const IdentityDescriptor& d, std::uint64_t s, int n,
               const TruncationPolicy& p) { return run_cross_method(d, s, n, p, false); });
        add({"EULER-PROD",
             "(x/((z+x-1)(z+x))) prod (1+1/n)^z (1+z/(x+n))^{-1} agrees with the "
             "product path",
             "x,z complex", "points 0.15 away from poles; z+x != 0", 1e-9, 60},
            [](const IdentityDescriptor& d, std::uint64_t s, int n,
               const TruncationPolicy& p) { return run_cross_method(d, s, n, p, true); });
        add({"DUP", "Gamma(x,z)Gamma(x+z,-z)(x-1)(z+x-1) = 1", "x,z complex",
             "x, x+z off-lattice; |x-1|,|z+x-1| > 0.1", 1e-9, 100},
            run_dup);
        add({"HALF-INT",
             "Gamma((2k+1)/2,(2l+1)/2) closed form vs direct evaluation",
             "k,l <= 4, k+l >= 1", "none", 1e-9, 24},
            run_half_int);
        add({"RESIDUE",
             "residue at z=-(x+m): m=-1 -> 1/Gamma(x); else "
             "(-1)^{m+1}(x)_{2m+1}/((m+1)! Gamma(x+2m+1))",
             "x in {1.3, 2.5, 0.7+0.2i, 1}, m=-1..2",
             "limit (z+x+m)Gamma(x,z) along shrinking radii", 1e-6, 16},
            run_residue);
        add({"MULT-CONST",
             "f(x,z) = 4^z Gamma(x,z)Gamma(x,z+1/2)/(2 Gamma(2x-1,2z)) is independent "
             "of z",
             "x complex, z1, z2 complex", "all six Gamma arguments clean", 1e-8, 200},
            run_mult_const);
        add({"GAUSS-2",
             "Gamma(x,z)Gamma(x,z+1/2)Gamma(1-x,z)Gamma(1-x,z+1/2) = 2^{2-4z} "
             "Gamma(2x-1,2z)Gamma(1-2x,2z) tan(pi x)/(x-1/2)",
             "x,z complex", "x not integer or 1/2; all arguments clean", 1e-8, 200},
            run_gauss2);
        add({"STIRLING-EXACT",
             "log Gamma(x,z) = (z+x-3/2)log(z+x-1) - z + 1 - (x-1/2)log x + I(x) - "
             "I(z+x-1)",
             "x,z real positive", "z+x-1 > 0.1", 1e-9, 200},
            run_stirling_exact);
        add({"STIRLING-ASYMPT",
             "Gamma(x,z)/((z+x-1)^{z+x-3/2} e^{1-z} x^{1/2-x}) -> 1 as x grows",
             "x in {10,20,40,80}, z=2", "deviation decreasing, <= 0.1 at x=10, <= "
             "0.013 at x=80",
             0.1, 4},
            run_stirling_asympt);
        add({"SERIES-Z",
             "log Gamma(x,z+1) = -z gamma(x) - sum ((-1)^{m-1}/m) zeta(m,x) z^m",
             "x complex, |z| <= 0.4 min(1,|x|)", "Re(x) > 0", 1e-10, 40},
            run_series_z);
        add({"SERIES-X",
             "log Gamma(x+1,z) via constant series + (psi(z+1)+gamma-1)(x-1) + "
             "zeta-difference terms",
             "x,z real positive, |x-1| <= 0.4 min(1,z+1)", "per series hypothesis",
             1e-8, 40},
            run_series_x);
        add({"SERIES-Z-COEFF",
             "a_m from m a_m = -gamma(x) a_{m-1} + sum (-1)^{m-k} zeta(m-k,x) a_k vs "
             "finite differences",
             "x in {1,1.5,2}, m <= 6", "Re(x) > 0", 1e-7, 21},
            [](const IdentityDescriptor& d, std::uint64_t s, int,
               const TruncationPolicy& p) { return run_series_coeff(d, s, p, true, false); });
        add({"SERIES-Z-COEFF-literal",
             "printed recursion with (-1)^m inside the sum vs finite differences",
             "x in {1,1.5,2}, m <= 6", "Re(x) > 0", 1e-7, 21},
            [](const IdentityDescriptor& d, std::uint64_t s, int,
               const TruncationPolicy& p) { return run_series_coeff(d, s, p, true, true); });
        add({"SERIES-X-COEFF",
             "b_m from m b_m = c(z) b_{m-1} + sum (-1)^{m-k}(zeta(m-k,z)-zeta(m-k)-"
             "z^{-(m-k)}+1) b_k, c(z) = psi(z+1)+gamma-1, vs finite differences",
             "z in {1,1.5,2.5}, m <= 6", "Re(z) > 0", 1e-7, 21},
            [](const IdentityDescriptor& d, std::uint64_t s, int,
               const TruncationPolicy& p) { return run_series_coeff(d, s, p, false, false); });
        add({"SERIES-X-COEFF-literal",
             "printed recursion (additive b_{m-1}/m and unreduced constant series) vs "
             "finite differences",
             "z in {1,1.5,2.5}, m <= 6", "Re(z) > 0", 1e-7, 21},
            [](const IdentityDescriptor& d, std::uint64_t s, int,
               const TruncationPolicy& p) { return run_series_coeff(d, s, p, false, true); });
        add({"CONJ", "Gamma(conj x, conj z) = conj Gamma(x,z)", "x,z complex",
             "points 0.1 away from poles", 1e-12, 100},
            run_conj);
        return t;
    }();
    return entries;
}

}  // namespace

const std::vector<IdentityDescriptor>& registry() {
    static const std::vector<IdentityDescriptor> descs = [] {
        std::vector<IdentityDescriptor> v;
        for (const auto& e : table()) v.push_back(e.desc);
        return v;
    }();
    return descs;
}

IdentityReport verify_identity(const std::string& id, std::uint64_t seed,
                               int n_points, const TruncationPolicy& policy) {
    policy.validate();
    for (const auto& e : table()) {
        if (e.desc.id == id) {
            const int n = n_points > 0 ? n_points : e.desc.default_points;
            return e.run(e.desc, seed, n, policy);
        }
    }
    throw DomainError("verify_identity: unknown identity id '" + id + "'");
}

double mult_const_check(Complex x, Complex z1, Complex z2,
                        const TruncationPolicy& policy) {
    auto f = [&](Complex z) {
        const Complex num = std::pow(4.0, z) * gamma_xz(x, z, policy).value *
                            gamma_xz(x, z + 0.5, policy).value;
        return num / (2.0 * gamma_xz(2.0 * x - 1.0, 2.0 * z, policy).value);
    };
    const Complex f1 = f(z1);
    const Complex f2 = f(z2);
    return std::abs(f1 - f2) / std::max(1.0, std::abs(f1));
}

double gauss2_check(Complex x, Complex z, const TruncationPolicy& policy) {
    const Complex lhs = gamma_xz(x, z, policy).value *
                        gamma_xz(x, z + 0.5, policy).value *
                        gamma_xz(1.0 - x, z, policy).value *
                        gamma_xz(1.0 - x, z + 0.5, policy).value;
    const Complex rhs = std::pow(2.0, 2.0 - 4.0 * z) *
                        gamma_xz(2.0 * x - 1.0, 2.0 * z, policy).value *
                        gamma_xz(1.0 - 2.0 * x, 2.0 * z, policy).value *
                        std::tan(kPi * x) / (x - 0.5);
    return rel_residual(lhs, rhs);
}

std::vector<IdentityReport> run_all(std::uint64_t seed, const TruncationPolicy& policy) {
    std::vector<IdentityReport> reports;
    for (const auto& e : table())
        reports.push_back(verify_identity(e.desc.id, seed, 0, policy));
    return reports;
}

bool all_pass(const std::vector<IdentityReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

nlohmann::json report_to_json(const IdentityReport& report) {
    nlohmann::json residuals = nlohmann::json::array();
    for (const auto& pr : report.residuals)
        residuals.push_back({{"x_re", pr.x.real()},
                             {"x_im", pr.x.imag()},
                             {"z_re", pr.z.real()},
                             {"z_im", pr.z.imag()},
                             {"residual", pr.residual}});
    return {{"id", report.id},
            {"grid_spec", report.grid_spec},
            {"residuals", residuals},
            {"max_residual", report.max_residual},
            {"pass", report.pass},
            {"variant_notes", report.variant_notes}};
}

IdentityReport report_from_json(const nlohmann::json& j) {
    IdentityReport report;
    report.id = j.at("id").get<std::string>();
    report.grid_spec = j.at("grid_spec").get<std::string>();
    report.max_residual = j.at("max_residual").get<double>();
    report.pass = j.at("pass").get<bool>();
    report.variant_notes = j.at("variant_notes").get<std::string>();
    for (const auto& pr : j.at("residuals"))
        report.residuals.push_back(
            {Complex(pr.at("x_re").get<double>(), pr.at("x_im").get<double>()),
             Complex(pr.at("z_re").get<double>(), pr.at("z_im").get<double>()),
             pr.at("residual").get<double>()});
    return report;
}

std::string report_line(const IdentityReport& report) {
    double tol = 0.0;
    for (const auto& d : registry())
        if (d.id == report.id) tol = d.tolerance;
    char buf[256];
    std::snprintf(buf, sizeof buf, "[%s] %-24s points=%4zu max_residual=%.3e tol=%.0e",
                  report.pass ? "PASS" : "FAIL", report.id.c_str(),
                  report.residuals.size(), report.max_residual, tol);
    std::string line(buf);
    if (!report.variant_notes.empty()) line += "\n       note: " + report.variant_notes;
    return line;
}

std::vector<Complex> taylor_coeffs_fd(const std::function<Complex(double)>& f,
                                      int max_order, double h0, int levels) {
    std::vector<Complex> coeffs(max_order + 1);
    coeffs[0] = f(0.0);
    double factorial = 1.0;
    for (int m = 1; m <= max_order; ++m) {
        factorial *= double(m);
        // binomial weights for the m-th central difference
        std::vector<double> binom(m + 1);
        binom[0] = 1.0;
        for (int k = 1; k <= m; ++k)
            binom[k] = binom[k - 1] * double(m - k + 1) / double(k);

        // Step-halved Richardson: the difference quotient has an expansion in
        // h^2, so the Neville denominator for column j is 4^j - 1. Track the
        // dfridr-style error and keep the best tableau entry.
        std::vector<std::vector<Complex>> tableau;
        Complex best{};
        double best_err = std::numeric_limits<double>::infinity();
        for (int lev = 0; lev < levels; ++lev) {
            const double h = h0 / double(1 << lev);
            KahanSum<Complex> delta;
            for (int k = 0; k <= m; ++k) {
                const double offset = (double(m) / 2.0 - double(k)) * h;
                const double sign = (k % 2 == 0) ? 1.0 : -1.0;
                delta.add(sign * binom[k] * f(offset));
            }
            std::vector<Complex> row(lev + 1);
            row[0] = delta.total() / std::pow(h, m);
            double pow4 = 4.0;
            for (int j = 1; j <= lev; ++j) {
                row[j] = row[j - 1] +
                         (row[j - 1] - tableau[lev - 1][j - 1]) / (pow4 - 1.0);
                pow4 *= 4.0;
                const double err = std::max(std::abs(row[j] - row[j - 1]),
                                            std::abs(row[j] - tableau[lev - 1][j - 1]));
                if (err < best_err) {
                    best_err = err;
                    best = row[j];
                }
            }
            if (lev == 0) best = row[0];
            tableau.push_back(std::move(row));
        }
        coeffs[m] = best / factorial;
    }
    return coeffs;
}

}  // namespace bigamma
