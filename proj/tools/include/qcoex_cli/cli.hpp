#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qcoex::cli {

// Stable exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;  // oracle-check row above tolerance or not converged
inline constexpr int exit_invalid = 2;       // scenario failed validation or left a profile's range
inline constexpr int exit_usage = 64;        // bad flags, unknown subcommand or template
inline constexpr int exit_data = 65;         // malformed JSON or CSV
inline constexpr int exit_no_input = 66;     // config or profile file missing
inline constexpr int exit_cant_create = 73;  // output file cannot be written

std::vector<std::string> template_names();
/// Scenario JSON for a named template; throws std::out_of_range for unknown names.
std::string template_json(std::string_view name);

/// Entry point; `out` receives data only, `err` receives diagnostics.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcoex::cli
