// End-to-end checks of the command-line surface: exit codes, report shapes,
// determinism and the modulus-table override.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + " " + std::string(STABLEPOLY_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("field-info") {
    RunResult r = run_cli("field-info --m 2 --format json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["q"] == 4);
    CHECK(j["modulus_hex"] == "7");
    CHECK(j["trace_one_count"] == 2);

    CHECK(run_cli("field-info --m 1").out == "m=1 q=2 modulus=0x3 trace_one_count=1\n");
    // x^3+x^2+x+1 is reducible: configuration error
    CHECK(run_cli("field-info --m 3 --modulus f").exit_code == 2);
    CHECK(run_cli("field-info").exit_code == 2);  // --m missing
}

TEST_CASE("irred") {
    RunResult r = run_cli("irred --m 1 --hex 13 --format json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["irreducible"] == true);
    CHECK(j["degree"] == 4);

    r = run_cli("irred --m 4 --poly \"1*x^2 + 1*x + 3\" --format json");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).contains("irreducible"));

    CHECK(run_cli("irred --m 1").exit_code == 2);                      // no polynomial given
    CHECK(run_cli("irred --m 1 --hex 13 --poly x").exit_code == 2);    // both given
    CHECK(run_cli("irred --m 2 --hex 13").exit_code == 2);             // hex form needs GF(2)
}

TEST_CASE("orbit") {
    RunResult r = run_cli("orbit --m 1 --c 1 --a 1 --b 1 --format json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["irreducible_prefix_length"] == 2);
    CHECK(j["halted_at"] == 3);
    CHECK(j["degenerate"] == false);

    j = json::parse(run_cli("orbit --m 2 --c 1 --a 1 --b 1 --format json").out);
    CHECK(j["irreducible_prefix_length"] == 0);

    j = json::parse(run_cli("orbit --m 1 --c 1 --a 0 --b 1 --format json").out);
    CHECK(j["irreducible_prefix_length"] == 0);
    CHECK(j["degenerate"] == true);

    CHECK(run_cli("orbit --m 1 --c 0 --a 1 --b 1").exit_code == 2);  // not a quadratic
}

TEST_CASE("sweep") {
    RunResult r = run_cli("sweep --m 2 --format json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["total"] == 27);
    CHECK(j["fff_irred"] == 0);
    CHECK(j["counterexamples"].empty());

    CHECK(run_cli("sweep --m 9").exit_code == 2);  // guard

    SUBCASE("csv rows") {
        r = run_cli("sweep --m 1 --format csv");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("m,modulus_hex,total,f_irred,ff_irred,fff_irred,elapsed_ms") == 0);
        CHECK(r.out.find("1,3,1,1,1,0,") != std::string::npos);
    }
    SUBCASE("csv is sweep-only") {
        CHECK(run_cli("field-info --m 2 --format csv").exit_code == 2);
    }
    SUBCASE("thread count does not change the report") {
        json a = json::parse(run_cli("sweep --m 4 --threads 1 --format json").out);
        json b = json::parse(run_cli("sweep --m 4 --threads 3 --format json").out);
        a.erase("elapsed_ms");
        b.erase("elapsed_ms");
        CHECK(a == b);
    }
    SUBCASE("identical inputs give byte-identical output") {
        CHECK(run_cli("field-info --m 5 --format json").out ==
              run_cli("field-info --m 5 --format json").out);
        json a = json::parse(run_cli("sweep --m 3 --format json").out);
        json b = json::parse(run_cli("sweep --m 3 --format json").out);
        a.erase("elapsed_ms");
        b.erase("elapsed_ms");
        CHECK(a.dump() == b.dump());
    }
    SUBCASE("include-degenerate grows the total") {
        json j2 = json::parse(run_cli("sweep --m 2 --include-degenerate --format json").out);
        CHECK(j2["total"] == 48);  // 3 * 4 * 4
        CHECK(j2["fff_irred"] == 0);
    }
}

TEST_CASE("proof-replay") {
    RunResult r = run_cli("proof-replay --m 1 --a 1 --b 1 --format json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 4);
    for (const auto& step : j) CHECK(step["holds"] == true);

    // f = x^2 + x + 1 is reducible over GF(4): precondition failure
    CHECK(run_cli("proof-replay --m 2 --a 1 --b 1").exit_code == 2);
}

TEST_CASE("eisenstein") {
    RunResult r = run_cli("eisenstein --n-max 3 --format json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    for (const auto& entry : j) CHECK(entry["holds"] == true);

    CHECK(run_cli("eisenstein --n-max 40").exit_code == 2);  // guard
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").exit_code == 2);                      // subcommand required
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("sweep --m 2 --format xml").exit_code == 2);
}

TEST_CASE("--out writes the report to a file") {
    const auto path = std::filesystem::temp_directory_path() / "stablepoly_cli_out.json";
    std::filesystem::remove(path);
    RunResult r = run_cli("sweep --m 1 --format json --out " + path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    json j = json::parse(in);
    CHECK(j["total"] == 1);
    std::filesystem::remove(path);
}

TEST_CASE("STABLEPOLY_MODULUS_TABLE overrides the default modulus") {
    const auto path = std::filesystem::temp_directory_path() / "stablepoly_alt_table.txt";
    {
        std::ofstream out(path);
        out << "# alternate table\n3:d\n";  // x^3 + x^2 + 1, the other irreducible cubic
    }
    RunResult r = run_cli("field-info --m 3 --format json",
                          "STABLEPOLY_MODULUS_TABLE=" + path.string());
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["modulus_hex"] == "d");
    // an explicit --modulus still wins
    r = run_cli("field-info --m 3 --modulus b --format json",
                "STABLEPOLY_MODULUS_TABLE=" + path.string());
    CHECK(json::parse(r.out)["modulus_hex"] == "b");
    std::filesystem::remove(path);
}
