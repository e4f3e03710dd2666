#pragma once

#include <string>
#include <vector>

#include "contact_sextic/error.hpp"
#include "json_io.hpp"

namespace contact_sextic::cli {

enum ExitCode : int { Ok = 0, CheckFailed = 1, Usage = 2, MathDomain = 3 };

struct CommandResult {
    int exit_code = Ok;
    json payload = json::object();
    std::vector<std::string> artifacts;
    bool json_output = false;
    std::string message;  // usage text or error, for stderr
};

// args excludes the program name
CommandResult run(const std::vector<std::string>& args);

// exit code for a library failure
int exit_code_for(ErrorCode code);

// "key: value" lines for people; --json prints the payload instead
std::string human_readable(const json& payload);

}  // namespace contact_sextic::cli
