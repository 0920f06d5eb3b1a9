#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qrep::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_spec = 2,
    exit_domain = 3,
};

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1,0,2" -> {1, 0, 2}; "" -> {}.
std::vector<std::uint64_t> parse_digits(const std::string& text);

} // namespace qrep::cli
