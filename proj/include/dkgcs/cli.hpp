#pragma once

// `dkgcs` command-line front end. Exit codes: 0 success, 1 computation
// error or failed check, 2 invalid configuration.

#include <ostream>
#include <string>
#include <vector>

namespace dkg {

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0..5", "3" or "0,2,4". Non-negative integers only.
std::vector<int> parse_n_list(const std::string& text);

/// Comma-separated reals.
std::vector<double> parse_real_list(const std::string& text);

}  // namespace dkg
