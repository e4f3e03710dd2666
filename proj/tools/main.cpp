#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    // CONTACT_SEXTIC_LOG=debug|info|warn|error|off, default warn
    auto log = spdlog::stderr_color_st("contact_sextic");
    const char* level = std::getenv("CONTACT_SEXTIC_LOG");
    log->set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);

    std::vector<std::string> args(argv + 1, argv + argc);
    log->debug("args: {}", fmt::join(args, " "));
    const auto res = contact_sextic::cli::run(args);

    for (const auto& a : res.artifacts) log->info("wrote {}", a);
    if (!res.message.empty()) (res.exit_code == 0 ? std::cout : std::cerr) << res.message << (res.message.back() == '\n' ? "" : "\n");
    const bool failed_with_error = res.payload.contains("error");
    if (!res.payload.empty() && (res.json_output || !failed_with_error)) {
        if (res.json_output)
            std::cout << res.payload.dump(2) << '\n';
        else
            std::cout << contact_sextic::cli::human_readable(res.payload);
    }
    log->debug("exit {}", res.exit_code);
    return res.exit_code;
}
