#pragma once
// wenobench: configuration, case execution, sweeps and artifact export.
#include <ostream>
#include <string>
#include <vector>

#include "weno/problems.hpp"
#include "weno/solver.hpp"

namespace weno {

enum class Command { run, sweep, table };

struct RunConfig {
  Command command = Command::run;
  ProblemId problem = ProblemId::slp;
  std::vector<SchemeId> schemes;
  std::vector<int> ns;  // run: exactly one; sweep: the ladder
  int ny = 0;           // 2D only; 0 means ny = nx
  CflRule rule = CflRule::fixed;
  double cfl = 0.0;     // 0: problem default
  double t_end = -1;    // negative: problem default
  double eps = 1e-40;
  int p = 2;
  double nip_J = 1.5;
  double nip_theta = 0.1;
  ReconVars recon = ReconVars::characteristic;
  std::string out_dir;
  std::vector<double> snapshot_times;
  bool imr = false;
  std::string study;  // table only
  int jobs = 0;
  long inject_nan_step = -1;  // testing hook: poison one cell after this step

  /// Step configuration for one scheme, problem defaults filled in.
  StepConfig step_config(SchemeId scheme) const;
};

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "WENOBENCH_OUTPUT_DIR";

/// Parses argv-style arguments (without the program name). Throws
/// UsageError on bad input; throws HelpRequested for --help.
RunConfig parse_config(const std::vector<std::string>& args);

struct HelpRequested {
  std::string text;
};

/// Per-case summaries go to `log`; divergence diagnostics to `diag`.
int cmd_run(const RunConfig& cfg, std::ostream& log, std::ostream& diag);
int cmd_sweep(const RunConfig& cfg, std::ostream& log);
int cmd_table(const RunConfig& cfg, std::ostream& log);

/// Full entry point; returns the process exit code (0, 2 usage, 3 divergence).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weno
