#pragma once

// The bundled suite of known examples run by `absirr verify`.

#include <string>
#include <vector>

#include "absirr/cli/commands.hpp"

namespace absirr::cli {

struct VerifyCheck {
    std::string group;     // e.g. "block-monoid", "int-z"
    std::string name;
    std::string expected;
    std::string actual;
    bool pass() const { return expected == actual; }
};

/// Runs every check; exceptions inside a check are recorded as its actual value.
std::vector<VerifyCheck> run_verify_suite(const CommandOptions& opts);

}  // namespace absirr::cli
