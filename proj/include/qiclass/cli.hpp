#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qiclass/dehn.hpp"

namespace qiclass::cli {

inline constexpr std::string_view kVersion = "0.1.0";

/// Exit codes: 0 success / PASS, 1 property violation or refusal, 2 input error.
enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2 };

/// Runs one command line (args excludes the program name). Reports go to
/// `out` as JSON unless --plain is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {position, relator_index, sign, rotation, matched_length} per move.
nlohmann::json trace_to_json(const DehnTrace& trace);
/// Inverse of trace_to_json; replacements are re-derived by replay().
std::vector<DehnMove> moves_from_json(const nlohmann::json& trace);

}  // namespace qiclass::cli
