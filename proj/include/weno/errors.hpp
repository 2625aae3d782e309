#pragma once
#include <stdexcept>
#include <string>

namespace weno {

/// Bad user input: unknown ids, conflicting options, invalid combinations.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Weight sum not positive or not finite.
struct InvalidWeights : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-finite state produced during time integration.
struct SolverDiverged : std::runtime_error {
  SolverDiverged(const std::string& what, long cell, double time)
      : std::runtime_error(what + " at cell " + std::to_string(cell) + ", t = " + std::to_string(time)),
        cell(cell),
        time(time) {}
  long cell;
  double time;
};

/// Non-positive density or pressure where a physical state is required.
struct UnphysicalState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Problem without a closed-form solution.
struct NoExactSolution : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace weno
