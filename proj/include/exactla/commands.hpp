#pragma once

#include <optional>
#include <string>
#include <vector>

namespace exactla {

// One CLI invocation. Inputs are already-resolved text (file contents or
// inline literals); reading files and stdin is the caller's job.
struct Command {
    std::string verb;
    std::vector<std::string> inputs;
    bool trace = false;
    std::optional<std::string> form;
    std::optional<std::string> method;
    std::optional<std::string> entry;  // "i,k", 1-based
    std::optional<std::string> power;
    std::string format = "plain";
};

struct Report {
    int exit_code = 0;   // 0 answer, 1 domain error, 2 input or usage error
    std::string output;  // stdout text, newline terminated
    std::string error;   // stderr text, empty on success
};

Report run(const Command& command);

const std::vector<std::string>& known_verbs();

}  // namespace exactla
