#pragma once
// Linear advection and ideal-gas Euler: fluxes, wave speeds and
// characteristic bases.
#include <array>
#include <cmath>
#include <string>

#include "weno/errors.hpp"

namespace weno {

inline constexpr double kGamma = 1.4;

template <int N>
using State = std::array<double, N>;

/// Left (rows) and right (columns) eigenvectors of a flux Jacobian, L*R = I.
template <int N>
struct CharBasis {
  std::array<std::array<double, N>, N> L{};
  std::array<std::array<double, N>, N> R{};
};

template <int N>
State<N> char_project(const CharBasis<N>& b, const State<N>& u) {
  State<N> w{};
  for (int k = 0; k < N; ++k) {
    double s = 0;
    for (int m = 0; m < N; ++m) s += b.L[k][m] * u[m];
    w[k] = s;
  }
  return w;
}

template <int N>
State<N> char_unproject(const CharBasis<N>& b, const State<N>& w) {
  State<N> u{};
  for (int m = 0; m < N; ++m) {
    double s = 0;
    for (int k = 0; k < N; ++k) s += b.R[m][k] * w[k];
    u[m] = s;
  }
  return u;
}

// Linear advection u_t + u_x = 0.

inline double advection_flux(double u) { return u; }
inline constexpr double advection_speed() { return 1.0; }

// 1D Euler, U = (rho, rho u, E).

struct EulerState1D {
  double rho, mom, E;
};

inline double pressure(const EulerState1D& s) {
  return (kGamma - 1.0) * (s.E - 0.5 * s.mom * s.mom / s.rho);
}

inline EulerState1D euler1d_from_primitive(double rho, double u, double p) {
  return {rho, rho * u, p / (kGamma - 1.0) + 0.5 * rho * u * u};
}

/// Throws UnphysicalState naming `where` when rho or p is not positive.
void require_physical(double rho, double p, const std::string& where);

State<3> euler_flux_1d(const EulerState1D& s);
double sound_speed(double rho, double p);
/// Eigenvalues u - c, u, u + c.
State<3> euler_eigenvalues_1d(const EulerState1D& s);
CharBasis<3> char_basis_1d(const EulerState1D& avg);

// 2D Euler, U = (rho, rho u, rho v, E).

struct EulerState2D {
  double rho, momx, momy, E;
};

inline double pressure(const EulerState2D& s) {
  return (kGamma - 1.0) * (s.E - 0.5 * (s.momx * s.momx + s.momy * s.momy) / s.rho);
}

inline EulerState2D euler2d_from_primitive(double rho, double u, double v, double p) {
  return {rho, rho * u, rho * v, p / (kGamma - 1.0) + 0.5 * rho * (u * u + v * v)};
}

/// axis 0 gives F, axis 1 gives G.
State<4> euler_flux_2d(const EulerState2D& s, int axis);
CharBasis<4> char_basis_2d(const EulerState2D& avg, int axis);

}  // namespace weno
