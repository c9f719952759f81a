// Runs the built CLI binary against tests/golden and checks input sources.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cli_cases.hpp"

namespace {

const std::string cli = EXACTLA_CLI_PATH;

}  // namespace

TEST_CASE("golden outputs") {
    for (const auto& gc : cli_cases::cases()) {
        CAPTURE(gc.name);
        std::string expected;
        REQUIRE(cli_cases::read_file(std::string(EXACTLA_GOLDEN_DIR) + "/" + gc.name + ".out", expected));
        const auto got = cli_cases::run(cli, gc.args);
        CHECK(got.output == expected);
        CHECK(got.exit_code == gc.exit_code);
    }
}

TEST_CASE("inputs from files and stdin") {
    const auto path = std::filesystem::temp_directory_path() / "exactla_cli_input.txt";
    {
        std::ofstream out(path);
        out << "# Example system\n3 2 | 5\n-2 1 | -6\n";
    }
    CHECK(cli_cases::run(cli, {"solve", path.string()}).output == "unique: x1 = 17/7, x2 = -8/7\n");
    const std::string piped = "cat " + cli_cases::quote(path.string()) + " | " + cli_cases::quote(cli) + " solve -";
    FILE* pipe = popen(piped.c_str(), "r");
    REQUIRE(pipe);
    char buffer[256] = {};
    const std::size_t n = fread(buffer, 1, sizeof buffer - 1, pipe);
    pclose(pipe);
    CHECK(std::string(buffer, n) == "unique: x1 = 17/7, x2 = -8/7\n");
    std::filesystem::remove(path);
}

TEST_CASE("usage errors") {
    CHECK(cli_cases::run(cli, {}).exit_code == 2);
    CHECK(cli_cases::run(cli, {"det", "--bogus", "1"}).exit_code == 2);
    CHECK(cli_cases::run(cli, {"det", "--format", "xml", "1"}).exit_code == 2);
    CHECK(cli_cases::run(cli, {"det", "--", "-3"}).output == "-3\n");
    CHECK(cli_cases::run(cli, {"--help"}).exit_code == 0);
}
