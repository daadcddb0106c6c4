#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stefan::cli {

/// Parses a comma-separated list whose items are numbers or inclusive
/// ranges lo:hi:step. Throws DomainError on malformed input.
std::vector<double> parse_sweep(const std::string& text);

/// Runs the command line (args excludes the program name). Returns 0 on
/// success, 1 on solver failure and 2 on invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stefan::cli
