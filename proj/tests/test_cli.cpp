#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef CYCDIM_BIN
#error "CYCDIM_BIN must point at the command-line binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the real binary through the shell, capturing stdout and the exit code.
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CYCDIM_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

size_t count_lines(const std::string& s, const std::string& needle) {
    size_t count = 0;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line))
        if (line.find(needle) != std::string::npos) ++count;
    return count;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

TEST_CASE("table: exact and float routes agree at tiny genus") {
    RunResult r = run_cli("table --p 5 --g 1 --what gow --mode both --format csv");
    REQUIRE(r.exit_code == 0);
    // rows: header + 4 cells x 3 routes
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "p,g,index_kind,index,route,value,residual,match");
    size_t data_rows = 0;
    while (std::getline(in, line)) {
        ++data_rows;
        std::vector<std::string> fields = split_csv(line);
        REQUIRE(fields.size() == 8);
        if (fields[4] == "gow_float") {
            CHECK(std::stod(fields[6]) < 1e-12);
            CHECK(fields[7] == "yes");
        }
    }
    CHECK(data_rows == 12);
}

TEST_CASE("verify passes on the documented ranges") {
    RunResult five = run_cli("verify --p 5 --gmax 6");
    CHECK(five.exit_code == 0);
    CHECK(five.out.find("all 9 checks passed") != std::string::npos);

    RunResult thirteen = run_cli("verify --p 13 --gmax 3");
    CHECK(thirteen.exit_code == 0);

    RunResult three = run_cli("verify --p 3 --gmax 8");
    CHECK(three.exit_code == 0);
    CHECK(three.out.find("all 5 checks passed") != std::string::npos);
}

TEST_CASE("verify rejects a composite p") {
    CHECK(run_cli("verify --p 9 --gmax 3").exit_code == 2);
}

TEST_CASE("compare: coincidence and non-coincidence are both exit 0") {
    RunResult match = run_cli("compare --p 5 --gmin 1 --gmax 20");
    REQUIRE(match.exit_code == 0);
    CHECK(count_lines(match.out, "match=yes") == 20);
    CHECK(count_lines(match.out, "match=no") == 0);

    RunResult mismatch = run_cli("compare --p 7 --gmin 6 --gmax 12");
    REQUIRE(mismatch.exit_code == 0);
    CHECK(count_lines(mismatch.out, "match=no  multiset=no") >= 1);
}

TEST_CASE("compare emits the documented p = 5, g = 4 tuples as json") {
    RunResult r = run_cli("compare --p 5 --g 4 --format json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    std::vector<std::string> expected{"42", "48", "27", "8"};
    REQUIRE(doc["rows"].size() == 1);
    CHECK(doc["rows"][0]["gow_tuple"].get<std::vector<std::string>>() == expected);
    CHECK(doc["rows"][0]["tqft_tuple"].get<std::vector<std::string>>() == expected);
}

TEST_CASE("output is byte-identical across runs") {
    const char* cmd = "table --p 7 --gmin 1 --gmax 3 --what all --mode both --format json";
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("--out writes the same bytes as stdout") {
    RunResult direct = run_cli("table --p 5 --g 2 --what all --mode exact --format csv");
    REQUIRE(direct.exit_code == 0);

    std::string path = "cli_out_test.csv";
    RunResult filed = run_cli("table --p 5 --g 2 --what all --mode exact --format csv --out " + path);
    REQUIRE(filed.exit_code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == direct.out);
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("flag parsing errors exit with code 2") {
    CHECK(run_cli("table --p five").exit_code == 2);
    CHECK(run_cli("table --unknown-flag 3").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);              // a subcommand is required
    CHECK(run_cli("frobnicate --p 5").exit_code == 2);
    CHECK(run_cli("table --p 5 --g 2 --gmin 1").exit_code == 2); // --g excludes --gmin
    CHECK(run_cli("table --p 3 --what tqft").exit_code == 2);
    CHECK(run_cli("table --p 3").exit_code == 2);   // default --what all needs p >= 5
}

TEST_CASE("--g is shorthand for a one-element range and --gmin alone closes it") {
    RunResult single = run_cli("table --p 5 --g 3 --what gow --format csv");
    RunResult range = run_cli("table --p 5 --gmin 3 --gmax 3 --what gow --format csv");
    RunResult min_only = run_cli("table --p 5 --gmin 3 --what gow --format csv");
    REQUIRE(single.exit_code == 0);
    CHECK(single.out == range.out);
    CHECK(single.out == min_only.out);
}

TEST_CASE("help is available and exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("table --help").exit_code == 0);
}
