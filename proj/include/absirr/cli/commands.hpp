#pragma once

// Subcommands of the absirr tool. Each command returns a report (the machine
// form, a JSON object with sorted keys) together with a human table.

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "absirr/krull.hpp"

namespace absirr::cli {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitInput = 2, kExitBudget = 3 };

struct CommandOptions {
    std::optional<std::string> spec_path;
    std::optional<std::string> sequence;
    std::optional<std::size_t> bound;   // support bound for classify (default 4)
    std::optional<long long> nmax;      // brute-force exponent bound (default 4)
    std::optional<long long> budget;    // node budget for every search
    bool machine = false;
    bool parallel = false;
};

struct CommandOutput {
    int exit_code = kExitOk;
    nlohmann::json report;
    std::string human;
};

/// "[1,0,2]" as an exponent vector, or a multiset of labels such as
/// "e1 e2 -f" or "g^3"; "1" is the empty sequence.
Sequence parse_sequence(const ClassSet& c, const std::string& text);

CommandOutput cmd_atoms(const KrullSpec& spec, const CommandOptions& opts);
CommandOutput cmd_factor(const KrullSpec& spec, const Sequence& s, const CommandOptions& opts);
CommandOutput cmd_lengths(const KrullSpec& spec, const Sequence& s, const CommandOptions& opts);
CommandOutput cmd_absirred(const KrullSpec& spec, const Sequence& s, const CommandOptions& opts);
CommandOutput cmd_classify(const KrullSpec& spec, const CommandOptions& opts);
CommandOutput cmd_verify(const CommandOptions& opts);

/// Machine form: two-space indented JSON with sorted keys and a final newline.
std::string render_machine(const nlohmann::json& report);

/// Loads inputs, runs a command and prints it; maps errors to exit codes.
int run_command(const std::string& command, const CommandOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace absirr::cli
