#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringstar::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int false_verdict = 2;  // only with --fail-on-false
inline constexpr int usage = 64;
inline constexpr int bad_input = 65;     // malformed spec or violated precondition
inline constexpr int guard = 66;         // a size guard was exceeded
inline constexpr int defect = 70;        // internal consistency check failed
}  // namespace exit_code

/// Runs one command. `args` excludes the program name. The report goes to `out`,
/// diagnostics to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The report without its "timing" member, serialized compactly.
std::string stable_section(const std::string& report_json);

}  // namespace ringstar::cli
