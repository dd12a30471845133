#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "protogame/gamespec.hpp"

namespace protogame {

/// Exit codes: 0 ok, 1 claim mismatch, 2 usage, 3 unknown target,
/// 4 parse error, 5 constraint violation.
struct RunConfig {
    std::string command;                       // list | analyze | verify | export
    std::string target;                        // protocol name, alias, or spec file
    long long seed = 42;
    long long samples = 1000;
    std::optional<std::string> params_file;
    std::string format = "json";               // json | md
    std::optional<std::string> output_path;    // -o FILE, stdout otherwise
    std::string variant = "all";               // rational | naive | with_abort | all
};

struct RunResult {
    int exit_code = 0;
    std::string output;        // what goes to stdout (or the -o file)
    std::string diagnostics;   // what goes to stderr
};

/// Parses command-line words (without argv[0]); throws UsageError.
RunConfig parse_args(const std::vector<std::string> &args);

/// Full command dispatch with the documented exit-code mapping. Never throws.
RunResult run(const std::vector<std::string> &args);

/// Reads a params file: one "name = p/q" per line, '#' comments.
ParamSet load_params_file(const std::string &text);

/// Report builders, exposed for tests. Timing is set to 0 here; `run` fills it.
nlohmann::ordered_json build_report(const RunConfig &config);
nlohmann::ordered_json list_report();

std::string render_markdown(const nlohmann::ordered_json &report);
std::string render_list_markdown(const nlohmann::ordered_json &entries);

} // namespace protogame
