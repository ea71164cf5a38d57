#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jmg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInputError = 2;

/// exit_code: 0 success, 1 verification failed / infeasible, 2 input error.
struct CommandResult {
  int exit_code = kExitOk;
  std::string report;
};

struct CommonOptions {
  /// Unset: 1e-7 for the solver, 1e-9 for checks.
  std::optional<double> tol;
  std::size_t max_iter = 50000;
  std::size_t guard_vars = 100000;
  bool pretty = false;
  std::optional<std::string> out;
};

CommandResult cmd_realize(const std::string& graph_file, std::string_view method, bool faithful,
                          const std::string& outcomes, const CommonOptions& options);
CommandResult cmd_verify(const std::string& graph_file, const std::string& realization_file,
                         const CommonOptions& options);
CommandResult cmd_dilate(const std::string& povm_file, const CommonOptions& options);
CommandResult cmd_jm_check(const std::vector<std::string>& povm_files, const CommonOptions& options);
CommandResult cmd_demo(std::string_view name, double eta, std::size_t dim, const CommonOptions& options);

/// Parses argv, dispatches, prints the report; returns the exit code.
/// Reads JMG_GUARD_VARS to override the solver resource guard.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jmg::cli
