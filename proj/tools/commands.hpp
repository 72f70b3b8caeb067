#ifndef LOWPROB_TOOLS_COMMANDS_HPP
#define LOWPROB_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "problem_file.hpp"

namespace lowprob::cli {

/// Process exit codes; a stable contract for scripts.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 2,
    kExitInfeasible = 3,
    kExitMismatch = 4,
};

inline constexpr const char* kSchemaVersion = "1";

struct CommandOptions {
    std::string input;
    bool decimal = false;
    std::optional<std::uint64_t> seed;
    std::size_t max_r = 3;
    std::string family;            // lower only
    std::vector<std::string> sets; // lower only
};

using Report = nlohmann::ordered_json;

struct CommandResult {
    int exit_code = kExitOk;
    /// Present unless the command failed before producing a report.
    std::optional<Report> report;
    std::string diagnostic;
};

CommandResult cmd_dempster(const ProblemFile& problem, const CommandOptions& options);
CommandResult cmd_check(const ProblemFile& problem, const CommandOptions& options);
CommandResult cmd_lower(const ProblemFile& problem, const CommandOptions& options);
CommandResult cmd_verify(const ProblemFile& problem, const CommandOptions& options);

/// Loads options.input and dispatches on the command name ("dempster",
/// "check", "lower", "verify"). Library errors become exit codes here; the
/// report gains a timing block.
CommandResult run_command(const std::string& command, const CommandOptions& options);

/// Full command-line entry point: parses args (args[0] is the program name),
/// runs, writes the report to stdout or --out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The report rendered exactly as the tool writes it.
std::string render(const Report& report);

} // namespace lowprob::cli

#endif
