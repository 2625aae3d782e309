#pragma once
// Benchmark problems: initial data, exact solutions and cell averages.
#include <string>
#include <string_view>
#include <vector>

#include "weno/field.hpp"
#include "weno/solver.hpp"

namespace weno {

enum class ProblemId {
  slp,
  square_wave,
  high_crit,
  euler_sine,
  euler_nonpoly_sine,
  riemann2d_cfg9,
  shock_vortex,
  critical_recon
};

struct ProblemSpec {
  ProblemId id = ProblemId::slp;
  double x_min = -1, x_max = 1;
  double y_min = 0, y_max = 0;  // equal bounds: 1D
  Boundary bc = Boundary::periodic;
  double t_end = 0;
  SystemKind system = SystemKind::advection;

  bool is_2d() const { return y_max > y_min; }
  double period() const { return x_max - x_min; }
};

ProblemSpec problem_spec(ProblemId id);
std::string problem_name(ProblemId id);
/// Throws UsageError listing valid ids.
ProblemId parse_problem(std::string_view name);
std::vector<std::string> valid_problem_names();

/// Cell averages of the initial condition (ny = 0 means ny = nx for 2D).
Field init_problem(const ProblemSpec& spec, int nx, int ny = 0);

/// Scalar value (advection) or density (Euler) of the exact solution.
double exact_solution(const ProblemSpec& spec, double x, double t);
/// Exact average of exact_solution over [a, b] at time t.
double exact_cell_average(const ProblemSpec& spec, double a, double b, double t);

/// Range of the initial data, used as the oscillation reference.
struct ValueBounds {
  double lower, upper;
};
ValueBounds initial_bounds(const ProblemSpec& spec);

/// Component names for CSV headers.
std::vector<std::string> component_names(SystemKind sys);

}  // namespace weno
