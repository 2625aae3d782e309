#include "weno/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "weno/errors.hpp"

namespace weno {

ErrorReport error_norms(const std::vector<double>& u, const std::vector<double>& ref, double h) {
  if (u.size() != ref.size()) throw UsageError("error_norms: size mismatch");
  ErrorReport r;
  r.n = static_cast<int>(u.size());
  r.h = h;
  double s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double e = std::abs(ref[i] - u[i]);
    s += e;
    r.linf = std::max(r.linf, e);
  }
  r.l1 = h * s;
  return r;
}

ErrorReport error_norms(const Field& f, const ProblemSpec& spec, double t) {
  const double h = f.dx();
  std::vector<double> u(f.nx()), ref(f.nx());
  for (int i = 0; i < f.nx(); ++i) {
    u[i] = f(0, i);
    ref[i] = exact_cell_average(spec, f.xc(i) - 0.5 * h, f.xc(i) + 0.5 * h, t);
  }
  return error_norms(u, ref, h);
}

std::vector<double> convergence_orders(const std::vector<double>& e, const std::vector<double>& n) {
  std::vector<double> o(e.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 1; i < e.size(); ++i)
    o[i] = std::log(e[i - 1] / e[i]) / std::log(n[i] / n[i - 1]);
  return o;
}

IncreasedErrors increased_errors(const ErrorReport& r, const ErrorReport& ilw) {
  return {(r.l1 - ilw.l1) / ilw.l1 * 100.0, (r.linf - ilw.linf) / ilw.linf * 100.0};
}

Oscillation oscillation_metric(const std::vector<double>& u, double lower, double upper, bool periodic) {
  Oscillation o{0, 0, 0};
  if (u.empty()) return o;
  const auto [mn, mx] = std::minmax_element(u.begin(), u.end());
  o.overshoot = std::max(0.0, *mx - upper);
  o.undershoot = std::max(0.0, lower - *mn);
  for (std::size_t i = 1; i < u.size(); ++i) o.tv += std::abs(u[i] - u[i - 1]);
  if (periodic) o.tv += std::abs(u.front() - u.back());
  return o;
}

std::vector<double> row_slice(const Field& f, int c, int j) {
  std::vector<double> v(f.nx());
  for (int i = 0; i < f.nx(); ++i) v[i] = f(c, i, j);
  return v;
}

std::vector<double> column_slice(const Field& f, int c, int i) {
  std::vector<double> v(f.ny());
  for (int j = 0; j < f.ny(); ++j) v[j] = f(c, i, j);
  return v;
}

}  // namespace weno
