#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include <mcx/facets_io.hpp>
#include <mcx/families.hpp>
#include <mcx/morse.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the installed binary with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MCX_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.output.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

fs::path temp_path(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "mcx_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::size_t count_nonempty_lines(const std::string& text) {
    std::size_t lines = 0;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty()) ++lines;
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) ++lines;
    return lines;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("generate emits one facet line per edge", "[cli]") {
    auto path4 = run_cli("generate --family path --len 4");
    CHECK(path4.exit_code == 0);
    CHECK(count_nonempty_lines(path4.output) == 4);

    auto star = run_cli("generate --family ext-star --m 1 --n 3");
    CHECK(star.exit_code == 0);
    CHECK(count_nonempty_lines(star.output) == 7);

    auto wedge = run_cli("generate --family p-wedge --t 3 --left 0,2 --right 0,2");
    CHECK(wedge.exit_code == 0);
    CHECK(count_nonempty_lines(wedge.output) == 11);
}

TEST_CASE("generate rejects bad arguments with exit 2", "[cli]") {
    CHECK(run_cli("generate --family bogus").exit_code == 2);
    CHECK(run_cli("generate --family p-wedge --left garbage").exit_code == 2);
    // Missing the required --family is a CLI parse failure.
    CHECK(run_cli("generate").exit_code == 2);
}

TEST_CASE("morse writes the Morse complex and reports sizes", "[cli]") {
    auto in = temp_path("star02.facets");
    auto out = temp_path("star02_morse.facets");
    mcx::write_facets_file(in.string(), mcx::extended_star(0, 2));

    auto res = run_cli("morse --in " + in.string() + " --out " + out.string());
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("simplices by dimension:") != std::string::npos);
    CHECK(res.output.find("(total ") != std::string::npos);

    mcx::SimplicialComplex got = mcx::read_facets_file(out.string());
    mcx::SimplicialComplex want = mcx::morse_complex(mcx::extended_star(0, 2));
    CHECK(mcx::equal_complexes(got, want));
}

TEST_CASE("morse enforces the primitive-pair cap with exit 3", "[cli]") {
    auto in = temp_path("star03.facets");
    auto out = temp_path("star03_morse.facets");
    mcx::write_facets_file(in.string(), mcx::extended_star(0, 3));

    auto res = run_cli("morse --in " + in.string() + " --out " + out.string() + " --cap 4");
    CHECK(res.exit_code == 3);
}

TEST_CASE("homology subcommand reports the sphere profile of M(S_{0,2})", "[cli]") {
    auto in = temp_path("m_s02.facets");
    mcx::write_facets_file(in.string(), mcx::morse_complex(mcx::extended_star(0, 2)));

    SECTION("json schema") {
        auto res = run_cli("homology --in " + in.string() + " --json");
        REQUIRE(res.exit_code == 0);
        json doc = json::parse(res.output);
        REQUIRE(doc.is_object());
        CHECK(doc.size() == 5);
        REQUIRE(doc.contains("complex"));
        REQUIRE(doc.contains("dims"));
        REQUIRE(doc.contains("reduced_betti"));
        REQUIRE(doc.contains("torsion"));
        REQUIRE(doc.contains("euler"));
        CHECK(doc["complex"].get<std::string>() == "m_s02");
        CHECK(doc["dims"].get<int>() == 3);
        CHECK(doc["reduced_betti"] == json::array({0, 0, 1, 0}));
        CHECK(doc["torsion"] ==
              json::array({json::array(), json::array(), json::array(), json::array()}));
        CHECK(doc["euler"].get<long long>() == 2);
    }

    SECTION("plain text") {
        auto res = run_cli("homology --in " + in.string());
        REQUIRE(res.exit_code == 0);
        CHECK(res.output.find("dim 3") != std::string::npos);
        CHECK(res.output.find("b~2 = 1") != std::string::npos);
        CHECK(res.output.find("euler = 2") != std::string::npos);
    }
}

TEST_CASE("homology rejects an empty facets file with exit 2", "[cli]") {
    auto in = temp_path("empty.facets");
    {
        std::ofstream f(in);
        f << "# nothing here\n\n";
    }
    CHECK(run_cli("homology --in " + in.string()).exit_code == 2);
    CHECK(run_cli("homology --in " + temp_path("missing.facets").string()).exit_code == 2);
}

TEST_CASE("verify kozlov passes every path length", "[cli]") {
    auto res = run_cli("verify --theorem kozlov --max-len 4");
    REQUIRE(res.exit_code == 0);
    CHECK(count_occurrences(res.output, "[pass]") == 4);
    CHECK(res.output.find("4 row(s), 4 pass/degenerate, 0 fail") != std::string::npos);
}

TEST_CASE("verify main reports the degenerate instance as JSON", "[cli]") {
    auto res = run_cli("verify --theorem main --t 2 --n 1 --l 1 --json");
    REQUIRE(res.exit_code == 0);
    json rows = json::parse(res.output);
    REQUIRE(rows.is_array());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["theorem"].get<std::string>() == "main");
    CHECK(rows[0]["status"].get<std::string>() == "degenerate");
    CHECK(rows[0]["computed"].get<std::string>().find("S^3") != std::string::npos);
}

TEST_CASE("verify rejects an unknown theorem with exit 2", "[cli]") {
    CHECK(run_cli("verify --theorem bogus").exit_code == 2);
}

TEST_CASE("core reports strong collapsibility of M(S_{2,1})", "[cli]") {
    auto in = temp_path("m_s21.facets");
    mcx::write_facets_file(in.string(), mcx::morse_complex(mcx::extended_star(2, 1)));

    auto res = run_cli("core --in " + in.string());
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.find("dominated by") != std::string::npos);
    CHECK(res.output.find("core facets:") != std::string::npos);
    CHECK(res.output.find("strongly collapsible") != std::string::npos);
}

TEST_CASE("help exits zero", "[cli]") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("verify --help").exit_code == 0);
}
