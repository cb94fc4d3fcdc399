// bigamma: point evaluation, tabulation, series expansion, and identity
// verification for the two-variable gamma function.

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bigamma/gamma2.hpp"
#include "bigamma/series.hpp"
#include "bigamma/verify.hpp"

using namespace bigamma;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMathDomain = 2;

// Complex literal "a+bi" / "a-bi" with optional parts: "3", "-2.5", "i",
// "-i", "2i", "1+2i", "1.5e-3-0.5i".
bool parse_complex(const std::string& text, Complex* out) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return false;

    auto parse_real = [](const std::string& t, double* v) {
        if (t.empty() || t == "+") { *v = 1.0; return true; }
        if (t == "-") { *v = -1.0; return true; }
        char* end = nullptr;
        *v = std::strtod(t.c_str(), &end);
        return end && *end == '\0' && end != t.c_str();
    };

    if (s.back() == 'i' || s.back() == 'I') {
        const std::string body = s.substr(0, s.size() - 1);
        // split at the last +/- that is not an exponent sign and not leading
        size_t split = std::string::npos;
        for (size_t p = body.size(); p-- > 1;) {
            if ((body[p] == '+' || body[p] == '-') &&
                body[p - 1] != 'e' && body[p - 1] != 'E') {
                split = p;
                break;
            }
        }
        double re = 0.0, im = 0.0;
        if (split == std::string::npos) {
            if (!parse_real(body, &im)) return false;
        } else {
            if (!parse_real(body.substr(0, split), &re)) return false;
            if (!parse_real(body.substr(split), &im)) return false;
        }
        *out = Complex(re, im);
        return true;
    }
    double re = 0.0;
    if (!parse_real(s, &re)) return false;
    *out = Complex(re, 0.0);
    return true;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_complex(Complex v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
    return buf;
}

struct Range {
    double lo = 0.0, hi = 0.0, step = 1.0;
    bool is_range = false;
    Complex fixed{0.0, 0.0};

    std::vector<Complex> values() const {
        if (!is_range) return {fixed};
        std::vector<Complex> v;
        for (int i = 0;; ++i) {
            const double t = lo + double(i) * step;
            if (t > hi + 1e-9 * std::max(1.0, std::fabs(hi))) break;
            v.push_back(Complex(t, 0.0));
        }
        return v;
    }
};

bool parse_range(const std::string& s, Range* r) {
    const size_t c1 = s.find(':');
    if (c1 == std::string::npos) {
        r->is_range = false;
        return parse_complex(s, &r->fixed);
    }
    const size_t c2 = s.find(':', c1 + 1);
    if (c2 == std::string::npos) return false;
    try {
        r->lo = std::stod(s.substr(0, c1));
        r->hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
        r->step = std::stod(s.substr(c2 + 1));
    } catch (...) {
        return false;
    }
    if (!(r->step > 0.0) || r->hi < r->lo) return false;
    r->is_range = true;
    return true;
}

TruncationPolicy policy_from_env() {
    TruncationPolicy pol;
    if (const char* env = std::getenv("BIGAMMA_MAX_TERMS")) {
        try {
            pol.max_terms = std::max(8, std::stoi(env));
        } catch (...) {
        }
    }
    return pol;
}

int cmd_eval(const std::string& x_text, const std::string& z_text,
             const std::string& method, int max_terms, double tol, bool as_json) {
    Complex x, z;
    if (!parse_complex(x_text, &x) || !parse_complex(z_text, &z)) {
        std::fprintf(stderr, "error: malformed complex literal (use a+bi)\n");
        return kExitUsage;
    }
    TruncationPolicy pol = policy_from_env();
    if (max_terms > 0) pol.max_terms = max_terms;
    if (tol > 0) pol.target_rel_tol = tol;

    try {
        EvalResult r;
        if (method == "auto") {
            r = gamma_xz(x, z, pol);
        } else if (method == "weierstrass") {
            r = gamma_weierstrass(x, z, pol);
        } else if (method == "euler-limit") {
            r = gamma_euler_limit(x, z, pol);
        } else if (method == "euler-product") {
            r = gamma_euler_product(x, z, pol);
        } else if (method == "stirling") {
            if (std::fabs(x.imag()) > 0 || std::fabs(z.imag()) > 0)
                throw DomainError("stirling path requires real positive x, z");
            const StirlingParts p = gamma_stirling_log(x.real(), z.real(), pol);
            r = {Complex(std::exp(p.log_gamma()), 0.0), 2e-15, Method::stirling, 0};
        } else {
            std::fprintf(stderr, "error: unknown method '%s'\n", method.c_str());
            return kExitUsage;
        }
        if (as_json) {
            nlohmann::json j = {{"value_re", r.value.real()},
                                {"value_im", r.value.imag()},
                                {"err_estimate", r.err_estimate},
                                {"method", method_name(r.method)},
                                {"terms_used", r.terms_used}};
            std::printf("%s\n", j.dump().c_str());
        } else {
            std::printf("value = %s\n", fmt_complex(r.value).c_str());
            std::printf("err_estimate = %s\n", fmt(r.err_estimate).c_str());
            std::printf("method = %s\n", method_name(r.method));
        }
        return kExitOk;
    } catch (const PoleError& e) {
        if (as_json) {
            nlohmann::json j = {{"status", "pole"}, {"pole_index", e.pole_index}};
            if (e.has_residue) {
                j["residue_re"] = e.residue.real();
                j["residue_im"] = e.residue.imag();
            }
            std::printf("%s\n", j.dump().c_str());
        } else if (e.has_residue) {
            std::printf("pole m=%d, residue=%s\n", e.pole_index,
                        fmt_complex(e.residue).c_str());
        } else {
            std::printf("pole m=%d\n", e.pole_index);
        }
        return kExitMathDomain;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitMathDomain;
    }
}

int cmd_table(const std::string& x_text, const std::string& z_text,
              const std::string& format) {
    Range xr, zr;
    if (!parse_range(x_text, &xr) || !parse_range(z_text, &zr)) {
        std::fprintf(stderr, "error: malformed range (use a:b:step or a complex value)\n");
        return kExitUsage;
    }
    const std::vector<Complex> xs = xr.values();
    const std::vector<Complex> zs = zr.values();
    if (xs.empty() || zs.empty()) {
        std::fprintf(stderr, "error: empty range\n");
        return kExitUsage;
    }
    if (format != "csv" && format != "json") {
        std::fprintf(stderr, "error: format must be csv or json\n");
        return kExitUsage;
    }

    const TruncationPolicy pol = policy_from_env();
    nlohmann::json rows = nlohmann::json::array();
    if (format == "csv")
        std::printf("x_re,x_im,z_re,z_im,value_re,value_im,err_estimate,method,status,pole_index\n");
    for (const Complex& x : xs) {        // x-major row order
        for (const Complex& z : zs) {
            std::string status = "ok", method;
            Complex value(0, 0);
            double err = 0.0;
            int pole_index = 0;
            try {
                const EvalResult r = gamma_xz(x, z, pol);
                value = r.value;
                err = r.err_estimate;
                method = method_name(r.method);
            } catch (const PoleError& e) {
                status = "pole";
                pole_index = e.pole_index;
                method = "pole";
            } catch (const std::exception&) {
                status = "error";
                method = "error";
            }
            if (format == "csv") {
                if (status == "ok")
                    std::printf("%s,%s,%s,%s,%s,%s,%s,%s,ok,\n", fmt(x.real()).c_str(),
                                fmt(x.imag()).c_str(), fmt(z.real()).c_str(),
                                fmt(z.imag()).c_str(), fmt(value.real()).c_str(),
                                fmt(value.imag()).c_str(), fmt(err).c_str(),
                                method.c_str());
                else if (status == "pole")
                    std::printf("%s,%s,%s,%s,,,,pole,pole,%d\n", fmt(x.real()).c_str(),
                                fmt(x.imag()).c_str(), fmt(z.real()).c_str(),
                                fmt(z.imag()).c_str(), pole_index);
                else
                    std::printf("%s,%s,%s,%s,,,,error,error,\n", fmt(x.real()).c_str(),
                                fmt(x.imag()).c_str(), fmt(z.real()).c_str(),
                                fmt(z.imag()).c_str());
            } else {
                nlohmann::json row = {{"x_re", x.real()}, {"x_im", x.imag()},
                                      {"z_re", z.real()}, {"z_im", z.imag()}};
                if (status == "ok") {
                    row["value_re"] = value.real();
                    row["value_im"] = value.imag();
                    row["err_estimate"] = err;
                    row["method"] = method;
                    row["status"] = "ok";
                } else {
                    row["value_re"] = nullptr;
                    row["value_im"] = nullptr;
                    row["err_estimate"] = nullptr;
                    row["method"] = method;
                    row["status"] = status;
                    if (status == "pole") row["pole_index"] = pole_index;
                }
                rows.push_back(row);
            }
        }
    }
    if (format == "json") std::printf("%s\n", rows.dump(2).c_str());
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& ids, std::uint64_t seed, int points,
               bool as_json) {
    const TruncationPolicy pol = policy_from_env();
    std::vector<std::string> selected = ids;
    if (selected.empty())
        for (const auto& d : registry()) selected.push_back(d.id);

    std::vector<IdentityReport> reports;
    for (const auto& id : selected) {
        try {
            reports.push_back(verify_identity(id, seed, points, pol));
        } catch (const DomainError& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return kExitUsage;
        }
    }
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        std::printf("%s\n", arr.dump(2).c_str());
    } else {
        for (const auto& r : reports) std::printf("%s\n", report_line(r).c_str());
        int passed = 0;
        for (const auto& r : reports) passed += r.pass ? 1 : 0;
        std::printf("%d/%zu identities pass\n", passed, reports.size());
    }
    return all_pass(reports) ? kExitOk : kExitMathDomain;
}

int cmd_series(const std::string& var, const std::string& anchor_text, int order,
               bool paper_literal) {
    Complex anchor;
    if (!parse_complex(anchor_text, &anchor)) {
        std::fprintf(stderr, "error: malformed complex literal for --anchor\n");
        return kExitUsage;
    }
    if (var != "z" && var != "x") {
        std::fprintf(stderr, "error: --var must be z or x\n");
        return kExitUsage;
    }
    try {
        const SeriesExpansion s = var == "z" ? coeffs_a(anchor, order, paper_literal)
                                             : coeffs_b(anchor, order, paper_literal);
        std::printf("m,re,im\n");
        for (size_t m = 0; m < s.coefficients.size(); ++m)
            std::printf("%zu,%s,%s\n", m, fmt(s.coefficients[m].real()).c_str(),
                        fmt(s.coefficients[m].imag()).c_str());
        return kExitOk;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitMathDomain;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-variable gamma function evaluator and identity verifier"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate Gamma(x,z) at a point");
    std::string x_text, z_text, method = "auto";
    int max_terms = 0;
    double tol = 0.0;
    bool eval_json = false;
    eval->add_option("--x", x_text, "x as a+bi")->required();
    eval->add_option("--z", z_text, "z as a+bi")->required();
    eval->add_option("--method", method,
                     "weierstrass|euler-limit|euler-product|stirling|auto");
    eval->add_option("--max-terms", max_terms, "truncation override");
    eval->add_option("--tol", tol, "target relative tolerance");
    eval->add_flag("--json", eval_json, "emit JSON");

    // table
    auto* table = app.add_subcommand("table", "tabulate Gamma(x,z) over ranges");
    std::string xr_text, zr_text, format = "csv";
    table->add_option("--x-range", xr_text, "a:b:step or fixed value")->required();
    table->add_option("--z-range", zr_text, "a:b:step or fixed value")->required();
    table->add_option("--format", format, "csv|json");

    // verify
    auto* verify = app.add_subcommand("verify", "run the identity registry");
    std::vector<std::string> ids;
    std::uint64_t seed = 42;
    int points = 0;
    bool verify_json = false;
    verify->add_option("--id", ids, "identity id (repeatable; default: all)");
    verify->add_option("--seed", seed, "grid seed");
    verify->add_option("--points", points, "points per identity (0 = default)");
    verify->add_flag("--json", verify_json, "emit JSON reports");

    // series
    auto* series = app.add_subcommand("series", "print expansion coefficients");
    std::string var, anchor_text;
    int order = 8;
    bool paper_literal = false;
    series->add_option("--var", var, "z (coefficients a_m) or x (coefficients b_m)")
        ->required();
    series->add_option("--anchor", anchor_text, "fixed other variable")->required();
    series->add_option("--order", order, "highest coefficient order");
    series->add_flag("--paper-literal", paper_literal,
                     "use the printed recursions for adjudication");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (eval->parsed()) return cmd_eval(x_text, z_text, method, max_terms, tol, eval_json);
    if (table->parsed()) return cmd_table(xr_text, zr_text, format);
    if (verify->parsed()) return cmd_verify(ids, seed, points, verify_json);
    if (series->parsed()) return cmd_series(var, anchor_text, order, paper_literal);
    return kExitUsage;
}
