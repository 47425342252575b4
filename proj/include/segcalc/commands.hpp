#pragma once

// Command dispatch for the segcalc tool. Reports are JSON objects with a
// fixed key order: command, context, input, result, diagnostics.

#include "segcalc/formula.hpp"
#include "segcalc/permutation.hpp"
#include "segcalc/session.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace segcalc {

enum class Command { order, classify, mackey, verify, jl, cosets, epsilon };

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command cmd);

/// Process exit codes.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse_error = 2,
    exit_precondition = 3,
    exit_counterexample = 4,
};

struct CommandOptions {
    std::optional<int> d;
    std::optional<Sign> eta;
    std::optional<OracleTable> oracle;
    std::optional<std::size_t> random_count;
    std::uint64_t seed = 0;
    std::optional<Permutation> sigma;
};

struct Report {
    nlohmann::ordered_json json;
    /// exit_ok, or exit_counterexample when a check that should always hold
    /// failed.
    int status = exit_ok;
};

/// Throws PreconditionError (or InvalidLineError) for command-level
/// precondition violations.
Report run_command(Command cmd, const SessionFile& session, const CommandOptions& options);

/// Two-space indented JSON with a trailing newline.
std::string render_json(const Report& report);

/// Indented key/value rendering for terminals.
std::string render_pretty(const Report& report);

}  // namespace segcalc
