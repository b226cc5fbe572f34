#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "workbench/cli/expression.hpp"
#include "workbench/cli/format.hpp"
#include "workbench/cli/run.hpp"

using namespace workbench;
using namespace workbench::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(WORKBENCH_TEST_DATA) + "/" + name; }

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string c; std::getline(in, c, sep);) v.push_back(c);
    return v;
}

fs::path scratch(const std::string& name) {
    auto p = fs::temp_directory_path() / ("workbench_cli_test_" + name);
    fs::remove_all(p);
    return p;
}

}  // namespace

TEST(Expression, Evaluates) {
    const auto f = parse_expression("3z^2 - conj(z)*|z|^2 + 2(z+1)");
    const cplx z{0.3, -0.4};
    EXPECT_NEAR(std::abs(f(z) - (3.0 * z * z - std::conj(z) * std::norm(z) + 2.0 * (z + 1.0))), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(parse_expression("exp(i*re(z)) / xi")(z) - std::exp(cplx{0, 0.3}) / z), 0.0, 1e-15);
    EXPECT_EQ(parse_expression("z^-1")(cplx{2.0, 0.0}), cplx(0.5, 0.0));
    EXPECT_EQ(parse_expression("1.5e2")(0.0), cplx(150.0, 0.0));
}

TEST(Expression, Errors) {
    for (const char* bad : {"", "z +", "(z", "foo(z)", "z^0.5", "|z", "2 $ z"})
        EXPECT_THROW(parse_expression(bad), std::invalid_argument) << bad;
}

TEST(Expression, ComplexCells) {
    EXPECT_EQ(parse_complex("1.5"), cplx(1.5, 0.0));
    EXPECT_EQ(parse_complex("-2i"), cplx(0.0, -2.0));
    EXPECT_EQ(parse_complex("i"), cplx(0.0, 1.0));
    EXPECT_EQ(parse_complex("0.25-3e-05i"), cplx(0.25, -3e-05));
    EXPECT_EQ(parse_complex("1e+2+1e-1i"), cplx(100.0, 0.1));
    EXPECT_THROW(parse_complex("abc"), std::invalid_argument);
    EXPECT_EQ(parse_int_list("0, 3"), (std::vector<int>{0, 3}));
}

TEST(Format, ComplexRoundTrip) {
    EXPECT_EQ(format_complex({0.5, -0.25}), "0.5-0.25i");
    const cplx z{0.1, 1.0 / 3.0};
    EXPECT_EQ(parse_complex(format_complex(z)), z);
}

TEST(Cli, ToeplitzShift) {
    const auto r = run({"toeplitz", "--symbol", "z", "--cutoff", "8"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 10u);
    EXPECT_EQ(ls[0].rfind("# config: ", 0), 0u);
    const auto cfg = nlohmann::json::parse(ls[0].substr(10));
    EXPECT_EQ(cfg["params"]["cutoff"], 8);
    for (int j = 0; j <= 8; ++j) {
        const auto cells = split(ls[static_cast<std::size_t>(j + 1)], ',');
        ASSERT_EQ(cells.size(), 9u);
        for (int k = 0; k <= 8; ++k) {
            const cplx v = parse_complex(cells[static_cast<std::size_t>(k)]);
            const double expect = j == k + 1 ? std::sqrt((k + 1.0) / (k + 2.0)) : 0.0;
            EXPECT_NEAR(std::abs(v - expect), 0.0, 1e-10);
        }
    }
}

TEST(Cli, ToeplitzJsonAndBadCutoff) {
    const auto r = run({"--format", "json", "toeplitz", "--symbol", "1", "--cutoff", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["value"].size(), 3u);
    EXPECT_EQ(run({"toeplitz", "--symbol", "z", "--cutoff", "100"}).code, 2);
    EXPECT_EQ(run({"toeplitz", "--symbol", "z(", "--cutoff", "4"}).code, 2);
}

TEST(Cli, GelfandCheck) {
    auto r = run({"gelfand", "check", "--group", "s3", "--subgroup", "0,3"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["value"]["gelfand"], true);
    EXPECT_EQ(j["holds"], true);
    EXPECT_EQ(j["value"]["n_cosets"], 2);

    r = run({"gelfand", "check", "--group", data("s3.txt"), "--subgroup", "0,3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["value"]["gelfand"], true);

    r = run({"gelfand", "check", "--group", "q8", "--subgroup", "0"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(nlohmann::json::parse(r.out)["value"]["witness"].size(), 2u);
}

TEST(Cli, GelfandErrors) {
    EXPECT_EQ(run({"gelfand", "spherical", "--group", "s3", "--subgroup", "0"}).code, 2);
    EXPECT_EQ(run({"gelfand", "check", "--group", "s3", "--subgroup", "0,2"}).code, 2);  // not a subgroup
    EXPECT_EQ(run({"gelfand", "check", "--group", "nosuch", "--subgroup", "0"}).code, 2);
    const auto bad = scratch("bad_table.txt");
    std::ofstream(bad) << "3\n0 1 2\n1 2\n";
    EXPECT_EQ(run({"gelfand", "check", "--group", bad.string(), "--subgroup", "0"}).code, 2);
}

TEST(Cli, GelfandSpherical) {
    const auto r = run({"--seed", "7", "gelfand", "spherical", "--group", "s3", "--subgroup", "0,3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["value"]["count"], 2);
    EXPECT_EQ(j["config"]["seed"], 7);
}

TEST(Cli, ColombeauRate) {
    const auto r = run({"colombeau", "rate", "--f", "exp", "--q", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_GE(ls.size(), 14u);
    EXPECT_EQ(ls[1], "eps,defect");
    const std::string fit = ls.back();
    ASSERT_EQ(fit.rfind("# fit: ", 0), 0u);
    const auto j = nlohmann::json::parse(fit.substr(7));
    EXPECT_NEAR(j["slope"].get<double>(), 3.0, 0.2);
}

TEST(Cli, ColombeauSeminorm) {
    const auto r = run({"--format", "json", "colombeau", "rate", "--f", "heaviside", "--q", "0", "--alpha", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["params"]["quantity"], "seminorm");
    EXPECT_NEAR(j["value"]["fit"]["slope"].get<double>(), -1.0, 0.2);
    EXPECT_EQ(run({"colombeau", "rate", "--f", "nosuch"}).code, 2);
    EXPECT_EQ(run({"colombeau", "rate", "--f", "exp", "--q", "3", "--kind", "even"}).code, 2);
}

TEST(Cli, Bloch) {
    const auto r = run({"bloch", "--alpha", "1", "--poly", "0,0,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["value"]["seminorm"].get<double>(), 4.0 / (3.0 * std::sqrt(3.0)), 1e-6);
}

TEST(Cli, BergmanCommands) {
    auto r = run({"bergman", "kernel", "--z", "0.5", "--u", "0.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(std::abs(parse_complex(nlohmann::json::parse(r.out)["value"].get<std::string>()) - 16.0 / 9.0), 0.0, 1e-14);

    r = run({"bergman", "norm", "--f", "z", "--p", "2", "--strict-paper"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(nlohmann::json::parse(r.out)["value"]["norm"].get<double>(), std::sqrt(0.5), 1e-10);

    r = run({"bergman", "project", "--symbol", "z + conj(z)", "--cutoff", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["value"]["coefficients"].size(), 5u);

    // f = g = z: the convolution norm exceeds the product of norms.
    r = run({"bergman", "convolution", "--f", "z", "--g", "z", "--p", "2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(nlohmann::json::parse(r.out)["holds"], false);
}

TEST(Cli, HardyCommands) {
    auto r = run({"hardy", "norm", "--poly", "1,1", "--p", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["value"]["norm"].get<double>(), j["value"]["parseval"].get<double>(), 1e-10);

    r = run({"hardy", "kernel", "--z", "0.5", "--xi", "1", "--kind", "poisson"});
    EXPECT_NEAR(nlohmann::json::parse(r.out)["value"].get<double>(), 3.0, 1e-14);

    r = run({"hardy", "toeplitz", "--symbol", "xi + 1/xi", "--n", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out).size(), 6u);

    r = run({"hardy", "disc-membership", "--f", "xi^3"});
    EXPECT_EQ(r.code, 0);
    r = run({"hardy", "disc-membership", "--f", "conj(xi)"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(nlohmann::json::parse(r.out)["value"]["witness"], -1);
    EXPECT_EQ(run({"hardy", "disc-membership", "--f", "xi", "--m", "48"}).code, 2);
}

TEST(Cli, LieCommands) {
    auto r = run({"lie", "bracket", "--fields", data("sl2_fields.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["value"]["bracket"]["components"][0]["1,0"], -1.0);
    EXPECT_EQ(j["value"]["bracket"]["components"][1]["0,1"], 1.0);
    EXPECT_EQ(j["value"]["lemma64"]["exact"], true);

    EXPECT_EQ(run({"lie", "jacobi", "--fields", data("sl2_fields.json")}).code, 0);

    r = run({"lie", "flows", "--fields", data("sl2_fields.json"), "--point", "0.5,-0.3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_GE(nlohmann::json::parse(r.out)["value"]["slope"].get<double>(), 0.9);
}

TEST(Cli, LieFileErrors) {
    EXPECT_EQ(run({"lie", "bracket", "--fields", "/nonexistent/fields.json"}).code, 2);
    const auto bad = scratch("bad_fields.json");
    std::ofstream(bad) << R"({"fields": [{"dim": 2, "components": [{"1": 1.0}, {}]}, {"dim": 2, "components": [{}, {}]}]})";
    EXPECT_EQ(run({"lie", "bracket", "--fields", bad.string()}).code, 2);
    std::ofstream(bad) << "not json";
    EXPECT_EQ(run({"lie", "bracket", "--fields", bad.string()}).code, 2);
}

TEST(Cli, Divergence) {
    const auto f = scratch("blowup.json");
    std::ofstream(f) << R"({"fields": [{"dim": 1, "components": [{"4": 1.0}]}, {"dim": 1, "components": [{"0": 1.0}]}]})";
    const auto r = run({"lie", "flows", "--fields", f.string(), "--point", "20"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("divergence"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"suite", "bogus"}).code, 2);
    EXPECT_EQ(run({"bloch"}).code, 2);
    EXPECT_EQ(run({"--format", "xml", "bloch", "--poly", "1"}).code, 2);
    EXPECT_EQ(run({"--format", "csv", "bloch", "--poly", "1"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutFileAndDeterminism) {
    const auto p = scratch("rate.csv");
    ASSERT_EQ(run({"colombeau", "rate", "--f", "sin", "--q", "0", "--out", p.string()}).code, 0);
    std::ifstream in(p);
    const std::string first((std::istreambuf_iterator<char>(in)), {});
    EXPECT_EQ(first, run({"colombeau", "rate", "--f", "sin", "--q", "0"}).out);
    EXPECT_EQ(first.rfind("# config: ", 0), 0u);
}

TEST(Cli, SuiteWritesReports) {
    const auto dir = scratch("suite_lie");
    const auto r = run({"suite", "lie", "--out-dir", dir.string()});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("suite lie: PASS"), std::string::npos);
    std::ifstream in(dir / "suite_lie.json");
    const auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j["config"]["seed"], 0);
    EXPECT_EQ(j["holds"], true);
    EXPECT_TRUE(fs::exists(dir / "suite_lie_flow_sweep.csv"));
}
