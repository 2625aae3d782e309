#include "weno/solver.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace weno {

namespace {

struct AdvectionSys {
  static constexpr int N = 1;
  static constexpr bool unit_linear = true;
  static State<1> flux(const State<1>& u, int) { return u; }
  static CharBasis<1> basis(const State<1>&, int) {
    CharBasis<1> b;
    b.L[0][0] = b.R[0][0] = 1.0;
    return b;
  }
};

struct Euler1DSys {
  static constexpr int N = 3;
  static constexpr bool unit_linear = false;
  static State<3> flux(const State<3>& u, int) { return euler_flux_1d({u[0], u[1], u[2]}); }
  static CharBasis<3> basis(const State<3>& u, int) { return char_basis_1d({u[0], u[1], u[2]}); }
};

struct Euler2DSys {
  static constexpr int N = 4;
  static constexpr bool unit_linear = false;
  static State<4> flux(const State<4>& u, int axis) { return euler_flux_2d({u[0], u[1], u[2], u[3]}, axis); }
  static CharBasis<4> basis(const State<4>& u, int axis) {
    return char_basis_2d({u[0], u[1], u[2], u[3]}, axis);
  }
};

template <int N>
bool all_finite(const State<N>& s) {
  for (double v : s)
    if (!std::isfinite(v)) return false;
  return true;
}

long cell_index_of(const Field& f, int axis, int line, int m) {
  return axis == 0 ? long(line) * f.nx() + m : long(m) * f.nx() + line;
}

template <class Sys, Base B, bool Mop>
void sweep(const Field& f, Field& rate, int axis, double alpha, const WeightParams<double>& wp,
           bool characteristic, double t, bool accumulate) {
  constexpr int N = Sys::N;
  const int n = axis == 0 ? f.nx() : f.ny();
  const int lines = axis == 0 ? f.ny() : f.nx();
  const double h = axis == 0 ? f.dx() : f.dy();
  if constexpr (N == 1) {
    if (axis == 0 && Sys::unit_linear && alpha == 1.0) {
      // Rows are contiguous with their ghost cells: reconstruct in place.
      thread_local std::vector<double> lo;
      lo.resize(n + 1);
      for (int line = 0; line < lines; ++line) {
        reconstruct_line<B, Mop>(f.raw().data() + f.index(0, -3, line), n + 1, wp, lo.data());
        for (int m = 0; m < n; ++m) {
          const double v = -(lo[m + 1] - lo[m]) / h;
          if (!std::isfinite(v)) throw SolverDiverged("non-finite interface flux", cell_index_of(f, axis, line, m), t);
          if (accumulate)
            rate(0, m, line) += v;
          else
            rate(0, m, line) = v;
        }
      }
      return;
    }
  }
  std::vector<State<N>> cell(n + 6), flux(n + 1);

  auto cell_index = [&](int line, int m) { return axis == 0 ? long(line) * f.nx() + m : long(m) * f.nx() + line; };
  // Linear advection at unit speed: the LF flux is the left-biased state.
  const bool upwind = Sys::unit_linear && alpha == 1.0;
  std::vector<double> fwd(n + 6), rev(n + 6), lo(n + 1), ro(n + 1);
  std::vector<State<N>> uL(n + 1), uR(n + 1);

  for (int line = 0; line < lines; ++line) {
    for (int m = 0; m < n + 6; ++m) {
      const int i = axis == 0 ? m - 3 : line, j = axis == 0 ? line : m - 3;
      for (int c = 0; c < N; ++c) cell[m][c] = f(c, i, j);
    }
    if (N == 1 || !characteristic) {
      // Right-biased windows are left-biased windows of the reversed line.
      for (int c = 0; c < N; ++c) {
        for (int m = 0; m < n + 6; ++m) fwd[m] = cell[m][c];
        if (!upwind)
          for (int m = 0; m < n + 6; ++m) rev[m] = fwd[n + 5 - m];
        reconstruct_line<B, Mop>(fwd.data(), n + 1, wp, lo.data());
        if (!upwind) reconstruct_line<B, Mop>(rev.data(), n + 1, wp, ro.data());
        for (int k = 0; k <= n; ++k) {
          uL[k][c] = lo[k];
          uR[k][c] = upwind ? lo[k] : ro[n - k];
        }
      }
    } else if constexpr (N > 1) {
      auto rec = [&](double a, double b, double c, double d, double e) {
        return reconstruct_minus_t<B, Mop, double>(StencilWindow<double>{{a, b, c, d, e}}, wp);
      };
      for (int k = 0; k <= n; ++k) {
        const State<N>* w = &cell[k];  // cells k-3 .. k+2, interface between k-1 and k
        try {
          State<N> avg;
          for (int c = 0; c < N; ++c) avg[c] = 0.5 * (w[2][c] + w[3][c]);
          const CharBasis<N> basis = Sys::basis(avg, axis);
          std::array<State<N>, 6> W;
          for (int m = 0; m < 6; ++m) W[m] = char_project<N>(basis, w[m]);
          State<N> wl, wr;
          for (int q = 0; q < N; ++q) {
            wl[q] = rec(W[0][q], W[1][q], W[2][q], W[3][q], W[4][q]);
            wr[q] = rec(W[5][q], W[4][q], W[3][q], W[2][q], W[1][q]);
          }
          uL[k] = char_unproject<N>(basis, wl);
          uR[k] = char_unproject<N>(basis, wr);
        } catch (const InvalidWeights&) {
          throw SolverDiverged("non-finite reconstruction input", cell_index(line, std::max(k - 1, 0)), t);
        } catch (const UnphysicalState& e) {
          throw SolverDiverged(e.what(), cell_index(line, std::max(k - 1, 0)), t);
        }
      }
    }
    for (int k = 0; k <= n; ++k) {
      if (upwind) {
        flux[k] = uL[k];
      } else {
        try {
          flux[k] = global_lf_flux<N>(uL[k], uR[k], alpha, [axis](const State<N>& u) { return Sys::flux(u, axis); });
        } catch (const UnphysicalState& e) {
          throw SolverDiverged(e.what(), cell_index(line, std::max(k - 1, 0)), t);
        }
      }
      if (!all_finite<N>(flux[k]))
        throw SolverDiverged("non-finite interface flux", cell_index(line, std::max(k - 1, 0)), t);
    }
    for (int m = 0; m < n; ++m) {
      const int i = axis == 0 ? m : line, j = axis == 0 ? line : m;
      for (int c = 0; c < N; ++c) {
        const double v = -(flux[m + 1][c] - flux[m][c]) / h;
        if (accumulate)
          rate(c, i, j) += v;
        else
          rate(c, i, j) = v;
      }
    }
  }
}

template <class Sys>
void rhs_system(const Field& f, Field& rate, const StepConfig& cfg, SystemKind sys, double t) {
  const auto wp = cfg.weights_for(f.dx());
  const bool characteristic = cfg.recon == ReconVars::characteristic;
  const int axes = f.grid().is_2d() ? 2 : 1;
  with_scheme(cfg.scheme, [&](auto btag, auto mtag) {
    constexpr Base B = decltype(btag)::value;
    constexpr bool M = decltype(mtag)::value;
    for (int axis = 0; axis < axes; ++axis) {
      const double alpha = max_wave_speed(f, sys, axis);
      sweep<Sys, B, M>(f, rate, axis, alpha, wp, characteristic, t, axis > 0);
    }
  });
}

void check_components(const Field& f, SystemKind sys) {
  if (f.ncomp() != system_components(sys)) throw UsageError("field components do not match the system");
  if ((sys == SystemKind::euler2d) != f.grid().is_2d()) throw UsageError("system dimension does not match the grid");
}

}  // namespace

int system_components(SystemKind s) {
  switch (s) {
    case SystemKind::advection: return 1;
    case SystemKind::euler1d: return 3;
    case SystemKind::euler2d: return 4;
  }
  return 0;
}

WeightParams<double> StepConfig::weights_for(double dx) const {
  auto w = WeightParams<double>::for_grid(dx);
  w.eps = eps;
  w.p = p;
  w.nip.J = nip_J;
  w.nip.theta = nip_theta;
  return w;
}

double StepConfig::cfl_number(double dx) const {
  return rule == CflRule::dx_to_two_thirds ? std::pow(dx, 2.0 / 3.0) : cfl;
}

double max_wave_speed(const Field& f, SystemKind sys, int axis) {
  if (sys == SystemKind::advection) return advection_speed();
  double amax = 0;
  for (int j = 0; j < f.ny(); ++j) {
    for (int i = 0; i < f.nx(); ++i) {
      double rho, un, p;
      if (sys == SystemKind::euler1d) {
        const EulerState1D s{f(0, i, j), f(1, i, j), f(2, i, j)};
        rho = s.rho;
        un = s.mom / s.rho;
        p = pressure(s);
      } else {
        const EulerState2D s{f(0, i, j), f(1, i, j), f(2, i, j), f(3, i, j)};
        rho = s.rho;
        un = (axis == 0 ? s.momx : s.momy) / s.rho;
        p = pressure(s);
      }
      require_physical(rho, p, "cell " + std::to_string(long(j) * f.nx() + i));
      amax = std::max(amax, std::abs(un) + sound_speed(rho, p));
    }
  }
  return amax;
}

void semidiscrete_rhs(const Field& f, Field& rate, const StepConfig& cfg, SystemKind sys, double t) {
  check_components(f, sys);
  if (rate.raw().size() != f.raw().size()) rate = Field(f.ncomp(), f.grid());
  switch (sys) {
    case SystemKind::advection: rhs_system<AdvectionSys>(f, rate, cfg, sys, t); break;
    case SystemKind::euler1d: rhs_system<Euler1DSys>(f, rate, cfg, sys, t); break;
    case SystemKind::euler2d: rhs_system<Euler2DSys>(f, rate, cfg, sys, t); break;
  }
}

double compute_dt(const Field& f, const StepConfig& cfg, SystemKind sys) {
  const double cfl = cfg.cfl_number(f.dx());
  if (!(cfl > 0)) throw UsageError("CFL number must be positive");
  const double ax = max_wave_speed(f, sys, 0);
  double rate = ax / f.dx();
  if (f.grid().is_2d()) rate += max_wave_speed(f, sys, 1) / f.dy();
  if (rate > 0) return cfl / rate;
  // No signal speed: only a constant field may stand still.
  for (int c = 0; c < f.ncomp(); ++c)
    for (int j = 0; j < f.ny(); ++j)
      for (int i = 0; i < f.nx(); ++i)
        if (f(c, i, j) != f(c, 0, 0)) throw UsageError("zero wave speed on a non-constant field");
  return std::numeric_limits<double>::infinity();
}

void SspRk3::step(Field& u, double dt, const RhsFn& rhs) {
  if (!(dt > 0)) throw UsageError("time step must be positive");
  if (u1_.raw().size() != u.raw().size()) {
    u1_ = Field(u.ncomp(), u.grid());
    u2_ = Field(u.ncomp(), u.grid());
    L_ = Field(u.ncomp(), u.grid());
  }
  auto& U = u.raw();
  auto& U1 = u1_.raw();
  auto& U2 = u2_.raw();
  auto& L = L_.raw();
  const std::size_t n = U.size();

  rhs(u, L_);
  for (std::size_t k = 0; k < n; ++k) U1[k] = U[k] + dt * L[k];
  rhs(u1_, L_);
  for (std::size_t k = 0; k < n; ++k) U2[k] = 0.75 * U[k] + 0.25 * (U1[k] + dt * L[k]);
  rhs(u2_, L_);
  for (std::size_t k = 0; k < n; ++k) U[k] = U[k] / 3.0 + 2.0 / 3.0 * (U2[k] + dt * L[k]);
}

void ssp_rk3_step(Field& u, double dt, const RhsFn& rhs) {
  SspRk3 rk;
  rk.step(u, dt, rhs);
}

RunResult evolve(Field& f, const StepConfig& cfg, SystemKind sys, const StepObserver& observer) {
  check_components(f, sys);
  if (!(cfg.t_end >= 0)) throw UsageError("t_end must be non-negative");
  (void)make_scheme(cfg.scheme.base, cfg.scheme.mop);
  RunResult r;
  SspRk3 rk;
  const RhsFn rhs = [&](Field& u, Field& L) {
    apply_bc(u);
    semidiscrete_rhs(u, L, cfg, sys, r.t);
  };
  apply_bc(f);
  while (r.t < cfg.t_end) {
    const double raw = compute_dt(f, cfg, sys);
    const bool last = r.t + raw >= cfg.t_end;
    rk.step(f, last ? cfg.t_end - r.t : raw, rhs);
    r.t = last ? cfg.t_end : r.t + raw;
    ++r.steps;
    apply_bc(f);
    if (!f.interior_finite()) throw SolverDiverged("non-finite cell average", -1, r.t);
    if (observer) observer(f, r.steps, r.t);
  }
  return r;
}

std::vector<ImrSample> imr_sample(Field f, const StepConfig& cfg) {
  apply_bc(f);
  const auto wp = cfg.weights_for(f.dx());
  std::vector<ImrSample> out;
  out.reserve(static_cast<std::size_t>(f.nx() + 1) * f.ny() * 3);
  for (int j = 0; j < f.ny(); ++j) {
    for (int k = 0; k <= f.nx(); ++k) {
      const StencilWindow<double> w{{f(0, k - 3, j), f(0, k - 2, j), f(0, k - 1, j), f(0, k, j), f(0, k + 1, j)}};
      SideWeights<double> sw;
      reconstruct_minus(w, cfg.scheme, wp, &sw);
      for (int s = 0; s < 3; ++s) out.push_back({s, sw.js[s], sw.final[s]});
    }
  }
  return out;
}

}  // namespace weno
