// Command-line front end. Everything goes through the C API.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exactla/exactla.h"

namespace {

const char* const verbs_help =
    "Verbs:\n"
    "  solve rref reduce inverse det cofactor cramer adjoint inv-entry\n"
    "  basis span-member extend-basis subspace fundamentals\n"
    "  transform kernel range eigen diagonalize power\n"
    "  dot gram-schmidt decompose-sym transpose mul\n"
    "An input is '-' for stdin, a path to an existing file, or literal text\n"
    "such as \"1 2 | 3; 4 5 | 6\". Put '--' before inputs that start with '-'.\n";

// "-" reads stdin, an existing file is read, anything else is taken literally.
std::string resolve(const std::string& arg) {
    if (arg == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::error_code ec;
    if (arg.find('\n') == std::string::npos && std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::ostringstream text;
        text << in.rdbuf();
        return text.str();
    }
    return arg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rational linear algebra"};
    app.footer(verbs_help);
    app.set_version_flag("--version", std::string(xla_version()));

    std::string verb;
    std::vector<std::string> inputs;
    bool trace = false;
    std::string form, method, entry, power, format = "plain";

    app.add_option("verb", verb, "operation to run")->required();
    app.add_option("inputs", inputs, "matrices, vectors or forms");
    app.add_flag("--trace", trace, "show row operations");
    auto* form_opt = app.add_option("--form", form, "reduce target: semi-reduced, reduced, completely-reduced, echelon, rref");
    auto* method_opt = app.add_option("--method", method, "det/inverse method: rowred or cofactor");
    auto* entry_opt = app.add_option("--entry", entry, "inv-entry position i,k (1-based)");
    auto* power_opt = app.add_option("--power", power, "exponent for power");
    app.add_option("--format", format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    xla_command* command = nullptr;
    if (xla_command_new(verb.c_str(), &command) != XLA_OK) {
        std::cerr << xla_last_error() << "\n";
        return 2;
    }
    for (const auto& arg : inputs) xla_command_add_input(command, resolve(arg).c_str());
    if (trace) xla_command_set_flag(command, "trace", nullptr);
    if (*form_opt) xla_command_set_flag(command, "form", form.c_str());
    if (*method_opt) xla_command_set_flag(command, "method", method.c_str());
    if (*entry_opt) xla_command_set_flag(command, "entry", entry.c_str());
    if (*power_opt) xla_command_set_flag(command, "power", power.c_str());
    xla_command_set_flag(command, "format", format.c_str());

    xla_report* report = nullptr;
    if (xla_command_run(command, &report) != XLA_OK) {
        std::cerr << xla_last_error() << "\n";
        xla_command_free(command);
        return 1;
    }
    std::cout << xla_report_output(report);
    std::cerr << xla_report_error(report);
    const int code = xla_report_exit_code(report);
    xla_report_free(report);
    xla_command_free(command);
    return code;
}
