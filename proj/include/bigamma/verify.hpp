#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bigamma/types.hpp"

namespace bigamma {

struct IdentityDescriptor {
    std::string id;
    std::string anchor;              // the identity being tested, as a formula
    std::string arity;               // which variables range
    std::string domain_constraints;  // human-readable predicate
    double tolerance = 1e-8;
    int default_points = 200;
};

struct PointResidual {
    Complex x;
    Complex z;
    double residual = 0.0;
};

struct IdentityReport {
    std::string id;
    std::string grid_spec;
    std::vector<PointResidual> residuals;
    double max_residual = 0.0;
    bool pass = false;
    std::string variant_notes;
};

/// Fixed registry of every verified identity, in canonical order.
const std::vector<IdentityDescriptor>& registry();

/// Run one identity on a deterministic grid derived from (seed, id).
/// n_points == 0 selects the descriptor default. Throws DomainError for an
/// unknown id.
IdentityReport verify_identity(const std::string& id, std::uint64_t seed,
                               int n_points, const TruncationPolicy& policy);

/// |f(x,z1) - f(x,z2)| / max(1,|f(x,z1)|) for the n = 2 constant
///   f(x,z) = 4^z Gamma(x,z) Gamma(x,z+1/2) / (2 Gamma(2x-1,2z)).
double mult_const_check(Complex x, Complex z1, Complex z2,
                        const TruncationPolicy& policy);

/// Relative residual of the n = 2 multiplication corollary
///   G(x,z)G(x,z+1/2)G(1-x,z)G(1-x,z+1/2)
///     = 2^{2-4z} Gamma(2x-1,2z) Gamma(1-2x,2z) tan(pi x)/(x-1/2).
double gauss2_check(Complex x, Complex z, const TruncationPolicy& policy);

std::vector<IdentityReport> run_all(std::uint64_t seed, const TruncationPolicy& policy);

bool all_pass(const std::vector<IdentityReport>& reports);

nlohmann::json report_to_json(const IdentityReport& report);
IdentityReport report_from_json(const nlohmann::json& j);
std::string report_line(const IdentityReport& report);

/// Taylor coefficients of f around 0 from central finite differences with
/// step-halving Richardson extrapolation (Neville in h^2, best-diagonal
/// selection). Harness-side oracle, independent of the series recursions.
/// Returns coefficients 0..max_order; index 0 is f(0).
std::vector<Complex> taylor_coeffs_fd(const std::function<Complex(double)>& f,
                                      int max_order, double h0, int levels);

}  // namespace bigamma
