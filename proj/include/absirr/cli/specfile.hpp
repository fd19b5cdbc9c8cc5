#pragma once

// JSON spec files describing a Krull monoid by class data:
//
//   {
//     "group":   {"free_rank": 2, "torsion": [2]},
//     "classes": [[1, 0, 0], [-1, 0, 1]],
//     "labels":  ["a", "b"],          // optional
//     "mult":    [1, "inf"]           // optional, default all 1
//   }
//
// Coordinates list the free part first, then one residue per torsion
// component; residues are reduced on load.

#include <json.hpp>

#include <string>

#include "absirr/errors.hpp"
#include "absirr/krull.hpp"

namespace absirr::cli {

/// Input error with a location: "line L, column C" for syntax errors or a
/// field path such as "classes[2]" for schema errors.
class SpecError : public InvalidArgument {
public:
    SpecError(const std::string& source, const std::string& where, const std::string& message)
        : InvalidArgument(source + ": " + where + ": " + message), where_(where) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

KrullSpec parse_spec(const std::string& text, const std::string& source = "<spec>");
KrullSpec load_spec_file(const std::string& path);

nlohmann::json spec_to_json(const KrullSpec& spec);
/// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string emit_spec(const KrullSpec& spec);

}  // namespace absirr::cli
