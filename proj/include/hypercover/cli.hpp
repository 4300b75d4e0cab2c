#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypercover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitInvariant = 3;

/// Runs one command line (args excludes the program name). Input files
/// default to `in` when --in/--graph is absent.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hypercover::cli
