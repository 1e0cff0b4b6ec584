#ifndef NMTHERM_RUNNER_HPP
#define NMTHERM_RUNNER_HPP

#include <atomic>
#include <functional>
#include <ostream>
#include <thread>
#include <vector>

#include "nmtherm/config.hpp"

namespace nmtherm::cli {

// Exit codes of the command line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_numerical_error = 3;

// Executes fn(i) for i = 0..n-1 on a worker pool; each task writes into its
// own slot, so the aggregated output is identical for any worker count.
void parallel_for_ordered(int n, int workers,
                          const std::function<void(int)>& fn);

int resolve_workers(int configured);

// Executes one subcommand with a fully parsed configuration, writing CSV and
// JSON outputs under cfg.out_dir. Returns an exit code; `log` receives
// progress and warning lines.
int run_command(const std::string& command, const RunConfig& cfg,
                std::ostream& log);

// Full command-line entry (CLI11 parsing, config loading, overrides).
int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

}  // namespace nmtherm::cli

#endif
