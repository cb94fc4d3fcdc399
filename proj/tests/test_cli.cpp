#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(BIGAMMA_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : s) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

double value_from_eval_output(const std::string& out) {
    // first line: "value = <re>+<im>i"
    const auto ls = lines_of(out);
    REQUIRE(!ls.empty());
    REQUIRE(ls[0].rfind("value = ", 0) == 0);
    return std::strtod(ls[0].c_str() + 8, nullptr);
}

}  // namespace

TEST_CASE("eval: integer special value") {
    const RunResult r = run_cli("eval --x 3 --z 4");
    CHECK(r.exit_code == 0);
    CHECK(std::fabs(value_from_eval_output(r.out) - 60.0) <= 1e-8);
    CHECK(r.out.find("method = weierstrass") != std::string::npos);
}

TEST_CASE("eval: classical limit at x = 1") {
    const RunResult r = run_cli("eval --x 1 --z 0.5");
    CHECK(r.exit_code == 0);
    CHECK(std::fabs(value_from_eval_output(r.out) - 1.7724538509055160) <= 1e-10);
}

TEST_CASE("eval: pole reporting with residue and exit 2") {
    const RunResult r = run_cli("eval --x 2.5 --z -2.5");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("pole m=0") != std::string::npos);
    CHECK(r.out.find("residue=") != std::string::npos);
    CHECK(r.out.find("-0.752252778063675") != std::string::npos);
}

TEST_CASE("eval: methods agree") {
    for (const char* m : {"weierstrass", "euler-limit", "euler-product"}) {
        const RunResult r = run_cli(std::string("eval --x 1.7 --z 2.3 --method ") + m);
        CHECK(r.exit_code == 0);
        CHECK(std::fabs(value_from_eval_output(r.out) - 2.2010948110473315) <= 1e-8);
    }
}

TEST_CASE("eval: malformed flags give usage exit 1") {
    CHECK(run_cli("eval --x 3").exit_code == 1);
    CHECK(run_cli("eval --x nonsense --z 1").exit_code == 1);
    CHECK(run_cli("nosuchcommand").exit_code == 1);
}

TEST_CASE("eval: complex literal forms") {
    CHECK(run_cli("eval --x 1+0.5i --z 0.5-0.25i").exit_code == 0);
    CHECK(run_cli("eval --x i --z i").exit_code == 0);
    CHECK(run_cli("eval --x 1.5 --z=-i").exit_code == 0);
}

TEST_CASE("eval: json output parses") {
    const RunResult r = run_cli("eval --x 3 --z 4 --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::fabs(j.at("value_re").get<double>() - 60.0) <= 1e-8);
    CHECK(j.at("method").get<std::string>() == "weierstrass");
    CHECK(j.contains("err_estimate"));
    CHECK(j.contains("terms_used"));
}

TEST_CASE("eval: deterministic output bytes") {
    const RunResult a = run_cli("eval --x 1.3+0.2i --z 0.7");
    const RunResult b = run_cli("eval --x 1.3+0.2i --z 0.7");
    CHECK(a.out == b.out);
}

TEST_CASE("table: 3x3 grid, header, x-major order") {
    const RunResult r = run_cli("table --x-range 1:3:1 --z-range 1:3:1 --format csv");
    CHECK(r.exit_code == 0);
    const auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 10);  // header + 9 rows
    CHECK(ls[0] ==
          "x_re,x_im,z_re,z_im,value_re,value_im,err_estimate,method,status,pole_index");
    // row order: x-major (x=1 z=1, x=1 z=2, x=1 z=3, x=2 z=1, ...)
    CHECK(ls[1].rfind("1,0,1,0,", 0) == 0);
    CHECK(ls[2].rfind("1,0,2,0,", 0) == 0);
    CHECK(ls[4].rfind("2,0,1,0,", 0) == 0);
}

TEST_CASE("table: pole rows flagged, never NaN") {
    const RunResult r = run_cli("table --x-range 2.5 --z-range -3:-2:0.5 --format csv");
    CHECK(r.exit_code == 0);
    const auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(r.out.find("nan") == std::string::npos);
    CHECK(r.out.find("pole,0") != std::string::npos);  // z = -2.5 hits m = 0
}

TEST_CASE("table: csv and json values agree") {
    const RunResult c = run_cli("table --x-range 1:2:0.5 --z-range 2:2:1 --format csv");
    const RunResult j = run_cli("table --x-range 1:2:0.5 --z-range 2:2:1 --format json");
    CHECK(c.exit_code == 0);
    CHECK(j.exit_code == 0);
    const auto rows = nlohmann::json::parse(j.out);
    const auto ls = lines_of(c.out);
    REQUIRE(rows.size() == ls.size() - 1);
    for (size_t i = 0; i < rows.size(); ++i) {
        const double want = rows[i].at("value_re").get<double>();
        // CSV column 5 is value_re
        std::string cell = ls[i + 1];
        for (int comma = 0; comma < 4; ++comma) cell = cell.substr(cell.find(',') + 1);
        const double got = std::strtod(cell.c_str(), nullptr);
        CHECK(std::fabs(got - want) <= 1e-15 * std::max(1.0, std::fabs(want)));
    }
}

TEST_CASE("table: empty or bad range is usage error") {
    CHECK(run_cli("table --x-range 3:1:1 --z-range 1:2:1").exit_code == 1);
    CHECK(run_cli("table --x-range 1:2:0 --z-range 1:2:1").exit_code == 1);
}

TEST_CASE("verify: single id passes with exit 0") {
    const RunResult r = run_cli("verify --id FE-z --points 40");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[PASS] FE-z") != std::string::npos);
}

TEST_CASE("verify: unknown id is usage error") {
    CHECK(run_cli("verify --id BOGUS-ID").exit_code == 1);
}

TEST_CASE("verify: json reports round-trip") {
    const RunResult r = run_cli("verify --id HALF-INT --id NORM --json");
    CHECK(r.exit_code == 0);
    const auto arr = nlohmann::json::parse(r.out);
    REQUIRE(arr.size() == 2);
    CHECK(arr[0].at("id") == "HALF-INT");
    CHECK(arr[1].at("id") == "NORM");
    for (const auto& rep : arr) {
        CHECK(rep.at("pass").get<bool>());
        CHECK(rep.contains("max_residual"));
        CHECK(rep.contains("grid_spec"));
        CHECK(rep.at("residuals").is_array());
    }
}

TEST_CASE("series: a-coefficients at anchor 1") {
    const RunResult r = run_cli("series --var z --anchor 1 --order 2");
    CHECK(r.exit_code == 0);
    const auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "m,re,im");
    CHECK(std::strtod(ls[1].substr(2).c_str(), nullptr) == 1.0);
    CHECK(std::fabs(std::strtod(ls[2].substr(2).c_str(), nullptr) -
                    (-0.57721566490153286)) <= 1e-12);
    CHECK(std::fabs(std::strtod(ls[3].substr(2).c_str(), nullptr) -
                    0.98905599532797256) <= 1e-12);
}

TEST_CASE("series: b0 at anchor 1 and paper-literal flag") {
    const RunResult r = run_cli("series --var x --anchor 1 --order 0");
    CHECK(r.exit_code == 0);
    const auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(std::fabs(std::strtod(ls[1].substr(2).c_str(), nullptr) - 1.0) <= 1e-12);

    const RunResult lit = run_cli("series --var x --anchor 1 --order 1 --paper-literal");
    CHECK(lit.exit_code == 0);
    const auto lls = lines_of(lit.out);
    REQUIRE(lls.size() == 3);
    CHECK(std::fabs(std::strtod(lls[2].substr(2).c_str(), nullptr) - 1.5) <= 1e-12);
}

TEST_CASE("series: domain violation exits 2") {
    CHECK(run_cli("series --var z --anchor -2 --order 4").exit_code == 2);
}

TEST_CASE("env override of truncation") {
    const std::string cmd = std::string("BIGAMMA_MAX_TERMS=500 ") + BIGAMMA_CLI_PATH +
                            " eval --x 1 --z 0.5 --json 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    pclose(pipe);
    const auto j = nlohmann::json::parse(out);
    CHECK(j.at("terms_used").get<long>() <= 600);
}
