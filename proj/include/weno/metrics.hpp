#pragma once
// Error norms, convergence orders and oscillation measures.
#include <vector>

#include "weno/field.hpp"
#include "weno/problems.hpp"

namespace weno {

struct ErrorReport {
  int n = 0;
  double h = 0;
  double l1 = 0;    // h * sum |e|
  double linf = 0;  // max |e|
};

/// Errors of component 0 against exact cell averages at time t.
ErrorReport error_norms(const Field& f, const ProblemSpec& spec, double t);
/// Errors of a cell-average vector against a reference vector.
ErrorReport error_norms(const std::vector<double>& u, const std::vector<double>& ref, double h);

/// orders[0] is undefined (NaN); orders[i] = log(e[i-1]/e[i]) / log(n[i]/n[i-1]).
std::vector<double> convergence_orders(const std::vector<double>& errors, const std::vector<double>& n);

struct IncreasedErrors {
  double chi1, chi_inf;  // percent
};
IncreasedErrors increased_errors(const ErrorReport& r, const ErrorReport& ilw);

struct Oscillation {
  double overshoot;   // max(u) above upper, 0 if none
  double undershoot;  // lower - min(u), 0 if none
  double tv;         // includes the wrap-around jump when periodic
};
Oscillation oscillation_metric(const std::vector<double>& u, double lower, double upper, bool periodic = false);

/// Interior values of component c along x on row j.
std::vector<double> row_slice(const Field& f, int c, int j = 0);
/// Interior values of component c along y on column i.
std::vector<double> column_slice(const Field& f, int c, int i);

}  // namespace weno
