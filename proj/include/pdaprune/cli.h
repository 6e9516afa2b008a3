#ifndef PDAPRUNE_CLI_H
#define PDAPRUNE_CLI_H

#include <pdaprune/pda.h>
#include <pdaprune/pruner.h>

#include <ostream>
#include <string>
#include <vector>

namespace pdaprune {

inline constexpr std::string_view kVersion = "0.1.0";

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitInput = 2,
    kExitEmptyLanguage = 3,
    kExitMismatch = 4,
};

enum class ReportFormat { Human, Machine };

/// Machine format, version 1:
///
///     pdaprune-report 1
///     transitions <n>
///     empty-language yes|no
///     STAT <name> <value>          (only with stats)
///     USELESS <id> unreachable|dead
///     USEFUL <id>
///
/// One USELESS/USEFUL line per transition, in declaration order.
[[nodiscard]] std::string format_report(const Pda& pda, const AnalysisReport& report, ReportFormat format,
                                        bool with_stats);

/// Runs the tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pdaprune

#endif
