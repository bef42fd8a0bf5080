#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dendrex::cli {

/// Exit statuses of run().
enum Status : int { pass = 0, verification_failed = 1, usage_error = 2 };

/// Seed of `verify sm` when --seed is not given.
inline constexpr unsigned long long default_seed = 7;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dendrex::cli
