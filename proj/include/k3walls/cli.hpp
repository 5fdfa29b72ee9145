#pragma once

#include "k3walls/json_io.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace k3walls {

inline constexpr const char* kSchemaVersion = "1";

struct CommandRequest {
    std::string subcommand;
    std::map<std::string, std::string> flags;  // name without dashes -> raw value ("true" for switches)
    std::optional<int> threads;                 // overrides K3WALLS_THREADS
};

struct Report {
    Json doc;
    int exit_code = 0;                    // 0 ok, 1 domain error, 2 verification failure
    std::optional<std::string> artifact;  // SVG text for plot-walls
    std::string summary;                  // one line for stderr
};

const std::vector<std::string>& subcommands();

Report execute(const CommandRequest& req);

// Deterministic text form: sorted keys, two-space indent, trailing newline.
std::string render(const Json& doc);

}  // namespace k3walls
