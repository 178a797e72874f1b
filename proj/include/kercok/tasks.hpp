#pragma once

#include "kercok/io.hpp"

#include <cstdint>
#include <string>

namespace kercok {

enum class OracleMode { Off, On, Auto };
OracleMode parse_oracle_mode(const std::string& text);

struct RunOptions {
    OracleMode oracle = OracleMode::Auto;
    long long max_order = 1024; ///< enumeration bound for the oracle
};

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_input = 2, exit_internal = 3 };

/// Skeleton report: schema id, versions and the command echo.
Json new_report(const std::string& command);
/// Sets "verdict" and returns the matching exit code.
int finish_report(Json& report, bool pass);
Json error_report(const std::string& command, ExitCode code, const std::string& message);
int exit_code_of(const Json& report);

/// Verification operations on a diagram document; op is one of six-term,
/// triple-braid, square-braid, snake, hexagon, quartic, quadratic, couple,
/// index, herbrand. Throws InputError on malformed documents.
Json run_verify(const std::string& op, const Json& doc, const RunOptions& opts);
/// Derived pages 0..pages of the couple described by the document.
Json run_spectral(const Json& doc, int pages);
/// Harada–Sai check of one chain document.
Json run_harada_document(const Json& doc);

} // namespace kercok
