#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kummer::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_input_error = 2;

/// Largest n accepted by scanning subcommands without --max-n-unsafe.
inline constexpr long default_max_n = 50;

struct RunHooks {
  /// Corrupts the Lefschetz formula inside certificates; exercises exit 1.
  bool inject_fault = false;
};

/// Runs one subcommand. `args` excludes the program name. The envelope goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const RunHooks& hooks = {});

} // namespace kummer::cli
