#pragma once
// Semi-discrete finite-volume evolution: WENO interface states, global
// Lax-Friedrichs flux, SSP-RK3.
#include <array>
#include <functional>
#include <limits>

#include "weno/field.hpp"
#include "weno/physics.hpp"
#include "weno/reconstruction.hpp"

namespace weno {

enum class SystemKind { advection, euler1d, euler2d };
enum class CflRule { fixed, dx_to_two_thirds };
enum class ReconVars { characteristic, componentwise };

int system_components(SystemKind s);

struct StepConfig {
  CflRule rule = CflRule::fixed;
  double cfl = 0.5;
  double t_end = 0.0;
  SchemeId scheme{};
  double eps = 1e-40;
  int p = 2;
  double nip_J = 1.5;
  double nip_theta = 0.1;
  ReconVars recon = ReconVars::characteristic;

  /// Weight parameters on a grid of spacing dx (sets the Z+ lambda).
  WeightParams<double> weights_for(double dx) const;
  double cfl_number(double dx) const;
};

/// f_hat = (f(uL) + f(uR) - alpha (uR - uL)) / 2, componentwise.
template <int N, class Flux>
State<N> global_lf_flux(const State<N>& uL, const State<N>& uR, double alpha, Flux&& f) {
  const State<N> fl = f(uL), fr = f(uR);
  State<N> out;
  for (int m = 0; m < N; ++m) out[m] = 0.5 * (fl[m] + fr[m] - alpha * (uR[m] - uL[m]));
  return out;
}

/// Largest |normal velocity| + c (or 1 for advection) over interior cells.
double max_wave_speed(const Field& f, SystemKind sys, int axis);

/// rate = -(flux differences); ghost layers of f must be current.
void semidiscrete_rhs(const Field& f, Field& rate, const StepConfig& cfg, SystemKind sys, double t = 0.0);

/// Raw step size from the CFL rule (no clipping); +inf for a motionless field.
double compute_dt(const Field& f, const StepConfig& cfg, SystemKind sys);

/// Step that lands exactly on t_end when the raw step would overshoot it.
inline double clip_dt(double t, double dt, double t_end) { return t + dt >= t_end ? t_end - t : dt; }

/// rhs(u, L) must fill L from u; it may refresh u's ghost layers.
using RhsFn = std::function<void(Field& u, Field& L)>;

/// Shu-Osher SSP-RK3 with reusable stage storage.
class SspRk3 {
 public:
  void step(Field& u, double dt, const RhsFn& rhs);

 private:
  Field u1_, u2_, L_;
};

void ssp_rk3_step(Field& u, double dt, const RhsFn& rhs);

struct RunResult {
  long steps = 0;
  double t = 0.0;
};

/// Called after each accepted step with the new state.
using StepObserver = std::function<void(Field& u, long step, double t)>;

RunResult evolve(Field& f, const StepConfig& cfg, SystemKind sys, const StepObserver& observer = {});

/// One (substencil, JS weight, final weight) sample.
struct ImrSample {
  int substencil;
  double omega_js;
  double omega_x;
};

/// Weights at every interface (left-biased side, componentwise on the first
/// component) of the current field.
std::vector<ImrSample> imr_sample(Field f, const StepConfig& cfg);

}  // namespace weno
