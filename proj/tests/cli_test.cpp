#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

// End-to-end checks of the installed command line surface: exit codes and the
// versioned JSON envelope. The binary path arrives via ODDRANK_CLI_BIN.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const char* bin = std::getenv("ODDRANK_CLI_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "ODDRANK_CLI_BIN must point at the CLI binary");
    std::string cmd = (env.empty() ? "" : "env " + env + " ") + std::string(bin) + " " + args +
                      " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) res.output.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

TEST_CASE("expand prints the pentagonal coefficients") {
    auto res = run_cli("expand --expr \"P(1;1)\" --prec 8");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("1*q^0") != std::string::npos);
    CHECK(res.output.find("-1*q^1") != std::string::npos);
    CHECK(res.output.find("1*q^5") != std::string::npos);
    CHECK(res.output.find("below q^8") != std::string::npos);
}

TEST_CASE("expand JSON carries the schema version and exact strings") {
    auto res = run_cli("--json expand --expr \"eta(50)/eta(2)\" --prec 10");
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("series").at("valuation") == 2);
    CHECK(j.at("series").at("coeffs").at(0) == "1");
}

TEST_CASE("verify single entries and exit codes") {
    CHECK(run_cli("verify --id T2 --prec 40").exit_code == 0);
    CHECK(run_cli("verify --id G1.2 --prec 80").exit_code == 0);
    // a healthy negative control exits 0; it proves corruption is detected
    CHECK(run_cli("verify --id G1.2 --prec 60 --negative-control").exit_code == 0);
    // unknown entries are usage errors
    CHECK(run_cli("verify --id NOPE").exit_code == 1);
    // missing/conflicting selector
    CHECK(run_cli("verify").exit_code == 1);
    CHECK(run_cli("verify --all --id T2").exit_code == 1);
}

TEST_CASE("verify --all runs the whole catalog") {
    auto res = run_cli("--json verify --all --prec 60");
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j.at("reports").size() == 39);
    for (const auto& rep : j.at("reports")) CHECK(rep.at("pass") == true);
}

TEST_CASE("congruence subcommand, both routes") {
    auto oracle_run = run_cli("congruence --alpha 1 --count 5 --via oracle");
    CHECK(oracle_run.exit_code == 0);
    auto e_run = run_cli("congruence --alpha 3 --count 10 --via e");
    CHECK(e_run.exit_code == 0);
    // far beyond the oracle budget: distinct budget exit code
    CHECK(run_cli("congruence --alpha 4 --count 50 --via oracle").exit_code == 3);
}

TEST_CASE("oracle subcommand prints the residue row and histogram") {
    auto res = run_cli("oracle --n 17 --modulus 5");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("m=0") != std::string::npos);
    CHECK(res.output.find("rank histogram") != std::string::npos);
    // N0(1,5,17) = N0(2,5,17) = 20 from the table; both rows appear
    CHECK(res.output.find("20") != std::string::npos);
}

TEST_CASE("arrays subcommand dumps valuations") {
    auto res = run_cli("arrays --family a00 --k -2..2 --n 0..6 --valuations");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("pi=") != std::string::npos);
    auto cd = run_cli("--json arrays --family c --alpha 2 --valuations");
    CHECK(cd.exit_code == 0);
    auto j = nlohmann::json::parse(cd.output);
    CHECK(j.at("entries").size() > 0);
}

TEST_CASE("cusps subcommand reports modularity and integer orders") {
    auto res = run_cli("cusps --eta \"eta(5)^2*eta(10)^2/(eta(1)^2*eta(2)^2)\" --level 10");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("modular: yes") != std::string::npos);
    CHECK(res.output.find("class c=10") != std::string::npos);

    auto j = nlohmann::json::parse(
        run_cli("--json cusps --eta \"eta(50)/eta(2)\" --level 50").output);
    CHECK(j.at("modular") == true);
}

TEST_CASE("verify --json emits the report array under the envelope") {
    auto res = run_cli("--json verify --id G3.1 --prec 60");
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j.at("schema") == 1);
    const auto& rep = j.at("reports").at(0);
    CHECK(rep.at("name") == "G3.1");
    CHECK(rep.at("pass") == true);
    CHECK(rep.at("first_mismatch").is_null());
}

TEST_CASE("--out writes the JSON envelope to a file") {
    std::string path = "/tmp/oddrank_cli_test_out.json";
    std::remove(path.c_str());
    auto res = run_cli("--json --out " + path + " verify --id G2.2 --prec 40");
    CHECK(res.exit_code == 0);
    std::FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string text;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), f)) text.append(buf.data(), n);
    std::fclose(f);
    auto j = nlohmann::json::parse(text);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("reports").at(0).at("name") == "G2.2");
    std::remove(path.c_str());
}

TEST_CASE("malformed expressions are usage errors") {
    CHECK(run_cli("expand --expr \"Q(1;1)\" --prec 8").exit_code == 1);
    CHECK(run_cli("cusps --eta \"P(1;1)\"").exit_code == 1);
}

TEST_CASE("precision budgets exit with the budget code") {
    CHECK(run_cli("expand --expr \"P(1;1)\" --prec 90000000").exit_code == 3);
    CHECK(run_cli("--max-exponent 100 expand --expr \"P(1;1)\" --prec 200").exit_code == 3);
}

TEST_CASE("non-positive precisions are usage errors") {
    CHECK(run_cli("expand --expr \"P(1;1)\" --prec 0").exit_code == 1);
    CHECK(run_cli("verify --id G1.2 --prec -5").exit_code == 1);
    CHECK(run_cli("expand --expr \"P(1;1)\"", "ODDRANK_PREC=0").exit_code == 1);
}

TEST_CASE("ODDRANK_PREC sets the default precision") {
    auto res = run_cli("--json expand --expr \"P(1;1)\"", "ODDRANK_PREC=12");
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j.at("series").at("precision") == 12);
    // an explicit --prec wins over the environment
    auto res2 = run_cli("--json expand --expr \"P(1;1)\" --prec 6", "ODDRANK_PREC=12");
    auto j2 = nlohmann::json::parse(res2.output);
    CHECK(j2.at("series").at("precision") == 6);
    // and a malformed value is a usage error
    CHECK(run_cli("expand --expr \"P(1;1)\"", "ODDRANK_PREC=xyz").exit_code == 1);
}
