#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace bigamma {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kLog2Pi = 1.83787706640934548356;

/// Values with magnitude beyond this are reported as overflow errors
/// rather than infinities.
inline constexpr double kOverflowLimit = 1e300;

enum class Acceleration { none, richardson };

enum class Method {
    euler_series,     // partial sums of the gamma(x) series definition
    stieltjes_limit,  // log(n+x) limit form of the zeroth Stieltjes constant
    weierstrass,      // log-space Weierstrass product
    euler_limit,      // n^z (x)_n / (z+x-1)_{n+1} with extrapolation
    euler_product,    // (1+1/n)^z (1+z/(x+n))^{-1} product
    stirling,         // exact log formula with sawtooth-integral corrections
};

const char* method_name(Method m);

/// Truncation/acceleration knobs shared by all series- and product-based
/// evaluators. Tail corrections may go deeper than tail_order when the
/// target tolerance asks for it; they never go shallower.
struct TruncationPolicy {
    int max_terms = 10000;
    int tail_order = 2;
    double target_rel_tol = 1e-12;
    Acceleration acceleration = Acceleration::richardson;

    void validate() const {
        if (max_terms < 8)
            throw std::invalid_argument("TruncationPolicy: max_terms must be >= 8");
        if (tail_order < 0)
            throw std::invalid_argument("TruncationPolicy: tail_order must be >= 0");
        if (!(target_rel_tol >= 1e-15))
            throw std::invalid_argument("TruncationPolicy: target_rel_tol must be >= 1e-15");
    }
};

/// Evaluated value plus an a posteriori relative error bound. The bound is
/// honest in the testable sense: doubling max_terms moves the value by at
/// most 4x err_estimate.
struct EvalResult {
    Complex value;
    double err_estimate = 0.0;
    Method method = Method::weierstrass;
    long terms_used = 0;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// Thrown when an evaluation lands on a pole. For the two-variable gamma
/// function the index m identifies the pole z = -(x+m), m >= -1, and the
/// residue there is attached when known.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& msg, int index = 0)
        : std::domain_error(msg), pole_index(index) {}
    PoleError(const std::string& msg, int index, Complex res)
        : std::domain_error(msg), pole_index(index), residue(res), has_residue(true) {}

    int pole_index = 0;
    Complex residue{0.0, 0.0};
    bool has_residue = false;
};

}  // namespace bigamma
