#pragma once
// Convergence and long-run studies producing error tables.
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "weno/metrics.hpp"
#include "weno/problems.hpp"
#include "weno/solver.hpp"

namespace weno {

/// Max over cells near x = 0 of the error in the reconstructed flux
/// difference (u(x+h/2) - u(x-h/2))/h for cell averages of x^3 + cos x.
/// Evaluated in quadruple precision when the toolchain provides it.
double critical_point_error(SchemeId id, double dx, int half_width = 4);
/// Same measurement for f(x) = x, which every scheme reproduces exactly.
double linear_profile_error(SchemeId id, double dx, int half_width = 4);

/// Default step configuration for a problem (CFL rule, final time).
StepConfig default_step_config(const ProblemSpec& spec, SchemeId scheme);

struct CaseResult {
  Field field;
  RunResult run;
  ErrorReport error;  // only meaningful when the problem has an exact solution
  bool has_error = false;
};

/// Initializes, evolves and (if possible) measures one case.
CaseResult run_case(const ProblemSpec& spec, const StepConfig& cfg, int nx, int ny = 0,
                    const StepObserver& observer = {});

struct TableRow {
  std::string scheme;
  int n = 0;
  double dx = 0;
  double l1 = 0, l1_order = 0, linf = 0, linf_order = 0, chi1 = 0, chi_inf = 0;
};

struct StudyConfig {
  std::string id;                 // critical, euler_ic1, euler_ic2, high_crit, slp_long, square_long
  std::vector<SchemeId> schemes;  // rows are emitted in this order
  std::vector<int> ns;            // resolutions (critical: N = 1/dx)
  double t_end = -1;              // negative: study default
  int jobs = 0;                   // worker threads; 0 = hardware concurrency
  StepConfig step{};              // weight parameters and reconstruction variables
};

std::vector<std::string> valid_study_ids();
/// Resolution ladder and scheme roster for a study id; throws UsageError.
StudyConfig default_study(std::string_view id);

/// Runs every (scheme, resolution) case plus the ideal-weight baseline for
/// the increased-error columns.
std::vector<TableRow> run_table(const StudyConfig& study);

/// Resolution ladder for one problem; `base` supplies everything but the
/// scheme (its CFL rule and t_end are used as given).
std::vector<TableRow> run_sweep(const ProblemSpec& spec, const std::vector<SchemeId>& schemes,
                                const std::vector<int>& ns, const StepConfig& base, int jobs = 0);

/// Header: scheme,N,dx,L1,L1_order,Linf,Linf_order,chi1,chi_inf
void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows);

/// substencil,omega_js,omega_x
void write_imr_csv(std::ostream& os, const std::vector<ImrSample>& samples);

/// Runs jobs [0, count) on up to `workers` threads; each index exactly once.
void parallel_for(int count, int workers, const std::function<void(int)>& job);

}  // namespace weno
