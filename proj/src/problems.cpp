#include "weno/problems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>

#include "weno/errors.hpp"

namespace weno {

namespace {

constexpr double kPi = std::numbers::pi;

struct NamedProblem {
  ProblemId id;
  const char* name;
};

constexpr std::array<NamedProblem, 8> kProblems = {{
    {ProblemId::slp, "slp"},
    {ProblemId::square_wave, "square_wave"},
    {ProblemId::high_crit, "high_crit"},
    {ProblemId::euler_sine, "euler_sine"},
    {ProblemId::euler_nonpoly_sine, "euler_nonpoly_sine"},
    {ProblemId::riemann2d_cfg9, "riemann2d_cfg9"},
    {ProblemId::shock_vortex, "shock_vortex"},
    {ProblemId::critical_recon, "critical_recon"},
}};

// Five-point Gauss-Legendre rule on [-1, 1].
struct Gauss5 {
  std::array<double, 5> x, w;
};

const Gauss5& gauss5() {
  static const Gauss5 g = [] {
    const double a = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    const double b = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    const double wa = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
    const double wb = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
    return Gauss5{{-b, -a, 0.0, a, b}, {wb, wa, 128.0 / 225.0, wa, wb}};
  }();
  return g;
}

using Fn = std::function<double(double)>;

double gauss_integral(const Fn& f, double a, double b) {
  const auto& g = gauss5();
  const double m = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0;
  for (int q = 0; q < 5; ++q) s += g.w[q] * f(m + h * g.x[q]);
  return s * h;
}

/// Integral over [a, b] with the rule applied separately between breakpoints.
double piecewise_integral(const Fn& f, double a, double b, const std::vector<double>& breaks) {
  double s = 0, lo = a;
  for (double x : breaks) {
    if (x > lo && x < b) {
      s += gauss_integral(f, lo, x);
      lo = x;
    }
  }
  return s + gauss_integral(f, lo, b);
}

// Shu's linear problem.
constexpr double kSlpA = 0.5, kSlpAlpha = 10.0, kSlpDelta = 0.005, kSlpZ = -0.7;

double slp_g(double x, double beta, double z) { return std::exp(-beta * (x - z) * (x - z)); }
double slp_f(double x, double alpha, double a) {
  return std::sqrt(std::max(1.0 - alpha * alpha * (x - a) * (x - a), 0.0));
}

double slp_u0(double x) {
  const double beta = std::log(2.0 / (36.0 * kSlpDelta * kSlpDelta));
  if (x >= -0.8 && x <= -0.6)
    return (slp_g(x, beta, kSlpZ - kSlpDelta) + 4.0 * slp_g(x, beta, kSlpZ) + slp_g(x, beta, kSlpZ + kSlpDelta)) / 6.0;
  if (x >= -0.4 && x <= -0.2) return 1.0;
  if (x >= 0.0 && x <= 0.2) return 1.0 - std::abs(10.0 * (x - 0.1));
  if (x >= 0.4 && x <= 0.6)
    return (slp_f(x, kSlpAlpha, kSlpA - kSlpDelta) + 4.0 * slp_f(x, kSlpAlpha, kSlpA) +
            slp_f(x, kSlpAlpha, kSlpA + kSlpDelta)) /
           6.0;
  return 0.0;
}

const std::vector<double> kSlpBreaks = {-0.8, -0.6, -0.4, -0.2, 0.0, 0.1, 0.2, 0.4, 0.405, 0.595, 0.6};

double square_u0(double x) { return x <= 0.0 ? 1.0 : 0.0; }

double high_crit_u0(double x) {
  const double y = x - 9.0;
  return std::exp(-std::pow(y, 10)) * std::pow(std::cos(kPi * y), 9);
}

double euler_sine_rho(double x) { return 1.0 + 0.2 * std::sin(kPi * x); }
double euler_nonpoly_rho(double x) { return 1.0 + 0.2 * std::sin(kPi * x - std::sin(kPi * x) / kPi); }

struct Profile {
  Fn u0;
  std::vector<double> breaks;
};

Profile profile(ProblemId id) {
  switch (id) {
    case ProblemId::slp: return {slp_u0, kSlpBreaks};
    case ProblemId::square_wave: return {square_u0, {0.0}};
    case ProblemId::high_crit: return {high_crit_u0, {}};
    case ProblemId::euler_sine: return {euler_sine_rho, {}};
    case ProblemId::euler_nonpoly_sine: return {euler_nonpoly_rho, {}};
    default: throw NoExactSolution("problem '" + problem_name(id) + "' has no closed-form solution");
  }
}

/// Average of the periodic profile over [a, b] after translation by t.
double translated_average(const ProblemSpec& spec, const Profile& pr, double a, double b, double t) {
  const double L = spec.period();
  const double shift = std::fmod(t, L);
  double a0 = std::fmod(a - shift - spec.x_min, L);
  if (a0 < 0) a0 += L;
  a0 += spec.x_min;
  const double b0 = a0 + (b - a);
  double s;
  if (b0 <= spec.x_max) {
    s = piecewise_integral(pr.u0, a0, b0, pr.breaks);
  } else {
    s = piecewise_integral(pr.u0, a0, spec.x_max, pr.breaks) +
        piecewise_integral(pr.u0, spec.x_min, b0 - L, pr.breaks);
  }
  return s / (b - a);
}

// Two-dimensional initial data.

std::array<double, 4> conserved2d(double rho, double u, double v, double p) {
  const auto s = euler2d_from_primitive(rho, u, v, p);
  return {s.rho, s.momx, s.momy, s.E};
}

std::array<double, 4> riemann9_state(bool east, bool north) {
  if (east && north) return conserved2d(1.0, 0.0, 0.3, 1.0);
  if (!east && north) return conserved2d(2.0, 0.0, -0.3, 1.0);
  if (!east && !north) return conserved2d(1.039, 0.0, -0.8133, 0.4);
  return conserved2d(0.5197, 0.0, -0.4259, 0.4);
}

std::array<double, 4> shock_vortex_point(double x, double y) {
  const double g = kGamma;
  const double rho_l = 1.0, u_l = std::sqrt(g), v_l = 0.0, p_l = 1.0;
  const double p_r = 1.3;
  if (x >= 0.5) {
    const double rho_r = rho_l * ((g - 1.0 + (g + 1.0) * p_r) / (g + 1.0 + (g - 1.0) * p_r));
    const double u_r = u_l + std::sqrt(2.0) * (1.0 - p_r) / std::sqrt(g - 1.0 + p_r * (g + 1.0));
    return conserved2d(rho_r, u_r, 0.0, p_r);
  }
  const double eps = 0.3, rc = 0.05, alpha = 0.204, xc = 0.25, yc = 0.5;
  const double r2 = ((x - xc) * (x - xc) + (y - yc) * (y - yc)) / (rc * rc);
  const double e = std::exp(alpha * (1.0 - r2));
  const double dT = -(g - 1.0) * eps * eps * e * e / (4.0 * alpha * g);
  const double drho = rho_l * rho_l / p_l * dT / (g - 1.0);
  const double du = eps / rc * (y - yc) * e;
  const double dv = -eps / rc * (x - xc) * e;
  const double dp = g * rho_l * rho_l / rho_l * dT / (g - 1.0);
  return conserved2d(rho_l + drho, u_l + du, v_l + dv, p_l + dp);
}

}  // namespace

ProblemSpec problem_spec(ProblemId id) {
  ProblemSpec s;
  s.id = id;
  switch (id) {
    case ProblemId::slp:
    case ProblemId::square_wave: s.x_min = -1; s.x_max = 1; s.t_end = 2000; break;
    case ProblemId::high_crit: s.x_min = 7.5; s.x_max = 10.5; s.t_end = 300; break;
    case ProblemId::euler_sine:
    case ProblemId::euler_nonpoly_sine:
      s.x_min = 0; s.x_max = 2; s.t_end = 2; s.system = SystemKind::euler1d;
      break;
    case ProblemId::riemann2d_cfg9:
    case ProblemId::shock_vortex:
      s.x_min = 0; s.x_max = 1; s.y_min = 0; s.y_max = 1;
      s.bc = Boundary::outflow;
      s.system = SystemKind::euler2d;
      s.t_end = id == ProblemId::riemann2d_cfg9 ? 0.3 : 0.35;
      break;
    case ProblemId::critical_recon: s.x_min = -1; s.x_max = 1; s.t_end = 0; break;
  }
  return s;
}

std::string problem_name(ProblemId id) {
  for (const auto& p : kProblems)
    if (p.id == id) return p.name;
  return "unknown";
}

std::vector<std::string> valid_problem_names() {
  std::vector<std::string> v;
  for (const auto& p : kProblems) v.emplace_back(p.name);
  return v;
}

ProblemId parse_problem(std::string_view name) {
  for (const auto& p : kProblems)
    if (name == p.name) return p.id;
  std::string msg = "unknown problem '" + std::string(name) + "'; valid:";
  for (const auto& n : valid_problem_names()) msg += " " + n;
  throw UsageError(msg);
}

Field init_problem(const ProblemSpec& spec, int nx, int ny) {
  Grid g;
  g.nx = nx;
  g.x_min = spec.x_min;
  g.x_max = spec.x_max;
  g.bc = spec.bc;
  if (spec.is_2d()) {
    g.ny = ny > 0 ? ny : nx;
    g.y_min = spec.y_min;
    g.y_max = spec.y_max;
  }
  Field f(system_components(spec.system), g);
  const double dx = f.dx();

  switch (spec.id) {
    case ProblemId::slp:
    case ProblemId::square_wave:
    case ProblemId::high_crit:
    case ProblemId::critical_recon: {
      if (spec.id == ProblemId::critical_recon) {
        for (int i = 0; i < nx; ++i) {
          const double a = f.xc(i) - 0.5 * dx, b = a + dx;
          f(0, i) = ((b * b * b * b / 4 + std::sin(b)) - (a * a * a * a / 4 + std::sin(a))) / dx;
        }
        break;
      }
      for (int i = 0; i < nx; ++i) f(0, i) = exact_cell_average(spec, f.xc(i) - 0.5 * dx, f.xc(i) + 0.5 * dx, 0.0);
      break;
    }
    case ProblemId::euler_sine:
    case ProblemId::euler_nonpoly_sine: {
      for (int i = 0; i < nx; ++i) {
        const double rho = exact_cell_average(spec, f.xc(i) - 0.5 * dx, f.xc(i) + 0.5 * dx, 0.0);
        // u = p = 1 are constant, so the conserved averages follow from rho's.
        f(0, i) = rho;
        f(1, i) = rho;
        f(2, i) = 1.0 / (kGamma - 1.0) + 0.5 * rho;
      }
      break;
    }
    case ProblemId::riemann2d_cfg9: {
      const double dy = f.dy();
      for (int j = 0; j < f.ny(); ++j) {
        for (int i = 0; i < nx; ++i) {
          const double x0 = f.xc(i) - 0.5 * dx, y0 = f.yc(j) - 0.5 * dy;
          const double fe = std::clamp((x0 + dx - 0.5) / dx, 0.0, 1.0);
          const double fn = std::clamp((y0 + dy - 0.5) / dy, 0.0, 1.0);
          std::array<double, 4> u{};
          for (int e = 0; e < 2; ++e)
            for (int n = 0; n < 2; ++n) {
              const double wgt = (e ? fe : 1 - fe) * (n ? fn : 1 - fn);
              if (wgt == 0) continue;
              const auto s = riemann9_state(e, n);
              for (int c = 0; c < 4; ++c) u[c] += wgt * s[c];
            }
          for (int c = 0; c < 4; ++c) f(c, i, j) = u[c];
        }
      }
      break;
    }
    case ProblemId::shock_vortex: {
      const auto& gq = gauss5();
      const double dy = f.dy();
      for (int j = 0; j < f.ny(); ++j) {
        for (int i = 0; i < nx; ++i) {
          const double x0 = f.xc(i) - 0.5 * dx, x1 = x0 + dx;
          const double yc = f.yc(j);
          // Split at the shock if it crosses the cell.
          std::vector<std::pair<double, double>> xs;
          if (x0 < 0.5 && x1 > 0.5) xs = {{x0, 0.5}, {0.5, x1}};
          else xs = {{x0, x1}};
          std::array<double, 4> u{};
          for (auto [a, b] : xs) {
            const double mx = 0.5 * (a + b), hx = 0.5 * (b - a);
            for (int p = 0; p < 5; ++p)
              for (int q = 0; q < 5; ++q) {
                const auto s = shock_vortex_point(mx + hx * gq.x[p], yc + 0.5 * dy * gq.x[q]);
                const double wgt = gq.w[p] * gq.w[q] * hx / dx * 0.5;
                for (int c = 0; c < 4; ++c) u[c] += wgt * s[c];
              }
          }
          for (int c = 0; c < 4; ++c) f(c, i, j) = u[c];
        }
      }
      break;
    }
  }
  return f;
}

double exact_solution(const ProblemSpec& spec, double x, double t) {
  const Profile pr = profile(spec.id);
  const double L = spec.period();
  double y = std::fmod(x - std::fmod(t, L) - spec.x_min, L);
  if (y < 0) y += L;
  return pr.u0(spec.x_min + y);
}

double exact_cell_average(const ProblemSpec& spec, double a, double b, double t) {
  return translated_average(spec, profile(spec.id), a, b, t);
}

ValueBounds initial_bounds(const ProblemSpec& spec) {
  switch (spec.id) {
    case ProblemId::slp:
    case ProblemId::square_wave: return {0.0, 1.0};
    case ProblemId::high_crit: return {-1.0, 1.0};
    case ProblemId::euler_sine:
    case ProblemId::euler_nonpoly_sine: return {0.8, 1.2};
    default: throw NoExactSolution("no reference bounds for '" + problem_name(spec.id) + "'");
  }
}

std::vector<std::string> component_names(SystemKind sys) {
  switch (sys) {
    case SystemKind::advection: return {"u"};
    case SystemKind::euler1d: return {"rho", "mom", "E"};
    case SystemKind::euler2d: return {"rho", "momx", "momy", "E"};
  }
  return {};
}

}  // namespace weno
