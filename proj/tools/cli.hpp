#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDisagreement = 2;

/// "K5", "P4", "C6", "S5".
Graph parse_named(std::string_view name);

/// Comma-separated positive integers, e.g. "1,2,4,14".
std::vector<long long> parse_int_list(std::string_view text);

/// Runs one command line (without the program name). JSON or CSV goes to out,
/// diagnostics to err. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace distspec::cli
