#include "weno/physics.hpp"

#include <sstream>
#include <utility>

namespace weno {

void require_physical(double rho, double p, const std::string& where) {
  if (!(rho > 0) || !(p > 0)) {
    std::ostringstream os;
    os << "unphysical state (rho = " << rho << ", p = " << p << ") at " << where;
    throw UnphysicalState(os.str());
  }
}

double sound_speed(double rho, double p) { return std::sqrt(kGamma * p / rho); }

State<3> euler_flux_1d(const EulerState1D& s) {
  const double u = s.mom / s.rho;
  const double p = pressure(s);
  return {s.mom, s.mom * u + p, u * (s.E + p)};
}

State<3> euler_eigenvalues_1d(const EulerState1D& s) {
  const double u = s.mom / s.rho;
  const double p = pressure(s);
  require_physical(s.rho, p, "eigenvalue evaluation");
  const double c = sound_speed(s.rho, p);
  return {u - c, u, u + c};
}

CharBasis<3> char_basis_1d(const EulerState1D& a) {
  const double u = a.mom / a.rho;
  const double p = pressure(a);
  require_physical(a.rho, p, "interface average state");
  const double c = sound_speed(a.rho, p);
  const double H = (a.E + p) / a.rho;
  const double b1 = (kGamma - 1.0) / (c * c);
  const double b2 = 0.5 * u * u * b1;

  CharBasis<3> B;
  B.R = {{{1.0, 1.0, 1.0}, {u - c, u, u + c}, {H - u * c, 0.5 * u * u, H + u * c}}};
  B.L = {{{0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), 0.5 * b1},
          {1.0 - b2, b1 * u, -b1},
          {0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), 0.5 * b1}}};
  return B;
}

State<4> euler_flux_2d(const EulerState2D& s, int axis) {
  const double u = s.momx / s.rho, v = s.momy / s.rho;
  const double p = pressure(s);
  if (axis == 0) return {s.momx, s.momx * u + p, s.momy * u, u * (s.E + p)};
  return {s.momy, s.momx * v, s.momy * v + p, v * (s.E + p)};
}

CharBasis<4> char_basis_2d(const EulerState2D& a, int axis) {
  // Build the x-direction basis in a frame where the normal velocity is
  // first, then swap the momentum rows/columns back for the y direction.
  const double un = (axis == 0 ? a.momx : a.momy) / a.rho;
  const double ut = (axis == 0 ? a.momy : a.momx) / a.rho;
  const double p = pressure(a);
  require_physical(a.rho, p, "interface average state");
  const double c = sound_speed(a.rho, p);
  const double q2 = un * un + ut * ut;
  const double H = (a.E + p) / a.rho;
  const double b1 = (kGamma - 1.0) / (c * c);
  const double b2 = 0.5 * q2 * b1;

  CharBasis<4> B;
  // columns: u-c, entropy, shear, u+c ; rows: rho, m_n, m_t, E
  B.R = {{{1.0, 1.0, 0.0, 1.0},
          {un - c, un, 0.0, un + c},
          {ut, ut, 1.0, ut},
          {H - un * c, 0.5 * q2, ut, H + un * c}}};
  B.L = {{{0.5 * (b2 + un / c), -0.5 * (b1 * un + 1.0 / c), -0.5 * b1 * ut, 0.5 * b1},
          {1.0 - b2, b1 * un, b1 * ut, -b1},
          {-ut, 0.0, 1.0, 0.0},
          {0.5 * (b2 - un / c), -0.5 * (b1 * un - 1.0 / c), -0.5 * b1 * ut, 0.5 * b1}}};
  if (axis == 1) {
    for (auto& row : B.L) std::swap(row[1], row[2]);
    std::swap(B.R[1], B.R[2]);
  }
  return B;
}

}  // namespace weno
