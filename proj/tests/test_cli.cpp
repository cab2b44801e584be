#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

using nlohmann::json;

struct run_result {
    int exit_code = -1;
    std::string output;
};

// runs the CLI with stderr folded into stdout
run_result run_cli(const std::string& args) {
    const std::string cmd = std::string(MOBILEX_CLI_PATH) + " " + args + " 2>&1";
    run_result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string major_fixture = std::string(MOBILEX_FIXTURE_DIR) + "/major_example.json";
const std::string inversion_fixture = std::string(MOBILEX_FIXTURE_DIR) + "/inversion_example.json";

}  // namespace

TEST(Cli, CountGoldenFixture) {
    const run_result r = run_cli("count --input " + major_fixture);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(json::parse(r.output), json::parse(R"({"e":"33000"})"));
}

TEST(Cli, MajPolySingleElement) {
    const run_result r = run_cli(R"(maj-poly --json '{"lambda":[1],"mu":[]}')");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(json::parse(r.output).at("coefficients"), json::parse(R"(["1"])"));
}

TEST(Cli, InvPolyGoldenEndpoints) {
    const run_result r = run_cli("inv-poly --input " + inversion_fixture);
    ASSERT_EQ(r.exit_code, 0);
    const json coeffs = json::parse(r.output).at("coefficients");
    ASSERT_EQ(coeffs.size(), 39u);
    EXPECT_EQ(coeffs[4], "1");
    EXPECT_EQ(coeffs[5], "4");
    EXPECT_EQ(coeffs[38], "1");
}

TEST(Cli, MalformedJsonIsInputError) {
    const run_result r = run_cli("count --json '{bad json'");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.output.find("malformed JSON"), std::string::npos);
}

TEST(Cli, NonBorderStripIsInputError) {
    const run_result r = run_cli(R"(count --json '{"lambda":[2,2],"mu":[]}')");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.output.find("not a border strip"), std::string::npos);
}

TEST(Cli, SizeCapViolationIsInputError) {
    const run_result r = run_cli(R"(oracle --json '{"n":19}')");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.output.find("supported range"), std::string::npos);
}

TEST(Cli, InvPolyRejectsShapeHangings) {
    const run_result r = run_cli("inv-poly --input " + major_fixture);
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.output.find("rooted trees"), std::string::npos);
}

TEST(Cli, ExcitedDiagramLines) {
    const run_result r = run_cli("excited --input " + major_fixture);
    ASSERT_EQ(r.exit_code, 0);
    std::vector<json> lines;
    std::istringstream is(r.output);
    for (std::string line; std::getline(is, line);)
        if (!line.empty()) lines.push_back(json::parse(line));
    ASSERT_EQ(lines.size(), 3u);
    std::multiset<long long> wp;
    for (const auto& l : lines) wp.insert(l.at("w_prime").get<long long>());
    EXPECT_EQ(wp, (std::multiset<long long>{12, 18, 24}));
}

TEST(Cli, HooksTable) {
    const run_result r = run_cli("hooks --input " + major_fixture + " --format csv");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("row,col,on_strip,h,h_prime"), std::string::npos);
    EXPECT_NE(r.output.find("2,1,0,4,12"), std::string::npos);  // mu-cell (2,1): h=4, h'=12
}

TEST(Cli, OracleOnRawPoset) {
    const run_result r = run_cli(R"(oracle --json '{"n":3,"covers":[[1,2],[1,3]],"omega":[2,1,3]}')");
    ASSERT_EQ(r.exit_code, 0);
    const json out = json::parse(r.output);
    EXPECT_EQ(out.at("e"), "2");
    EXPECT_EQ(out.at("maj"), json::parse(R"(["0","1","1"])"));
    EXPECT_EQ(out.at("inv"), json::parse(R"(["0","1","1"])"));
}

TEST(Cli, OracleOnMobileMatchesFormulas) {
    const run_result r = run_cli("oracle --input " + inversion_fixture);
    ASSERT_EQ(r.exit_code, 0);
    const json out = json::parse(r.output);
    EXPECT_EQ(out.at("inv")[4], "1");
    const run_result f = run_cli("inv-poly --input " + inversion_fixture);
    EXPECT_EQ(json::parse(f.output).at("coefficients"), out.at("inv"));
}

TEST(Cli, BoundsOutput) {
    const run_result r = run_cli("bounds --input " + major_fixture);
    ASSERT_EQ(r.exit_code, 0);
    const json out = json::parse(r.output);
    EXPECT_EQ(out.at("lower").at("num"), "205920");
    EXPECT_EQ(out.at("lower").at("den"), "7");
    EXPECT_EQ(out.at("excited"), "3");
}

TEST(Cli, EulerFamilyAudit) {
    const run_result r = run_cli("euler-family --kind A -p 2 -k 2 --audit");
    ASSERT_EQ(r.exit_code, 0);
    const json out = json::parse(r.output);
    EXPECT_EQ(out.at("lambda"), json::parse("[2,2,1]"));
    EXPECT_TRUE(out.at("audit").at("printed_matches_computed").get<bool>());
    EXPECT_TRUE(out.at("audit").at("sandwich_holds").get<bool>());
}

TEST(Cli, CsvPolynomialFormat) {
    const run_result r = run_cli(R"(maj-poly --json '{"lambda":[2,2],"mu":[1]}' --format csv)");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("power,coefficient"), std::string::npos);
    EXPECT_NE(r.output.find("1,1"), std::string::npos);
    EXPECT_NE(r.output.find("2,1"), std::string::npos);
}
