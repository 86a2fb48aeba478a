#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace epsalg::cli {

enum ExitCode : int { kPass = 0, kLawFailure = 1, kUsage = 2 };

/// Runs `epsalg <args...>` (args excludes the program name). Reports go to
/// `out` as they complete, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parallelism for law checks: hardware concurrency, capped by EPSALG_THREADS.
unsigned thread_budget();

}  // namespace epsalg::cli
