#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "weno/metrics.hpp"
#include "weno/problems.hpp"
#include "weno/solver.hpp"

using namespace weno;

namespace {

Field line_field(int n, double x0, double x1, Boundary bc = Boundary::periodic) {
  Grid g;
  g.nx = n;
  g.x_min = x0;
  g.x_max = x1;
  g.bc = bc;
  return Field(1, g);
}

Field sine_field(int n) {
  Field f = line_field(n, 0, 1);
  const double h = f.dx();
  for (int i = 0; i < n; ++i) {
    const double a = i * h, b = a + h;
    f(0, i) = (std::cos(2 * std::numbers::pi * a) - std::cos(2 * std::numbers::pi * b)) / (2 * std::numbers::pi * h);
  }
  return f;
}

StepConfig advection_cfg(SchemeId id) {
  StepConfig c;
  c.scheme = id;
  return c;
}

}  // namespace

TEST_CASE("ghost layers") {
  Field f = line_field(8, 0, 1);
  for (int i = 0; i < 8; ++i) f(0, i) = i;
  apply_bc(f);
  CHECK(f(0, -3) == 5);
  CHECK(f(0, -2) == 6);
  CHECK(f(0, -1) == 7);
  CHECK(f(0, 8) == 0);
  CHECK(f(0, 10) == 2);

  Field o = line_field(8, 0, 1, Boundary::outflow);
  for (int i = 0; i < 8; ++i) o(0, i) = i + 1;
  apply_bc(o);
  CHECK(o(0, -3) == 1);
  CHECK(o(0, -1) == 1);
  CHECK(o(0, 10) == 8);
}

TEST_CASE("2D ghost layers wrap in both directions") {
  Grid g;
  g.nx = 7;
  g.ny = 8;
  Field f(1, g);
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 7; ++i) f(0, i, j) = 10 * j + i;
  apply_bc(f);
  CHECK(f(0, -1, 2) == 26);
  CHECK(f(0, 1, -1) == 71);
  CHECK(f(0, 1, 8) == 1);
}

TEST_CASE("global Lax-Friedrichs flux") {
  auto id = [](const State<1>& u) { return u; };
  CHECK(global_lf_flux<1>({1.0}, {0.0}, 1.0, id)[0] == 1.0);
  CHECK(global_lf_flux<1>({0.7}, {0.7}, 3.0, id)[0] == 0.7);
  auto burgers = [](const State<1>& u) { return State<1>{0.5 * u[0] * u[0]}; };
  CHECK(global_lf_flux<1>({2.0}, {2.0}, 5.0, burgers)[0] == 2.0);
}

TEST_CASE("constant field gives zero rates") {
  for (SchemeId id : {make_scheme(Base::z), make_scheme(Base::nip, true), make_scheme(Base::js)}) {
    Field f = line_field(20, 0, 1);
    for (int i = 0; i < 20; ++i) f(0, i) = 0.4;
    apply_bc(f);
    Field r;
    semidiscrete_rhs(f, r, advection_cfg(id), SystemKind::advection);
    for (int i = 0; i < 20; ++i) CHECK(r(0, i) == 0.0);
  }
}

TEST_CASE("rates converge to -u_x at fifth order with ideal weights") {
  std::vector<double> errs, ns;
  for (int n : {20, 40, 80}) {
    Field f = sine_field(n);
    apply_bc(f);
    Field r;
    semidiscrete_rhs(f, r, advection_cfg(make_scheme(Base::ilw)), SystemKind::advection);
    std::vector<double> got(n), want(n);
    const double h = f.dx();
    for (int i = 0; i < n; ++i) {
      got[i] = r(0, i);
      // exact cell average of -u_x for u = sin(2 pi x)
      want[i] = -(std::sin(2 * std::numbers::pi * (i + 1) * h) - std::sin(2 * std::numbers::pi * i * h)) / h;
    }
    errs.push_back(error_norms(got, want, h).linf);
    ns.push_back(n);
  }
  const auto o = convergence_orders(errs, ns);
  CHECK(o[2] > 4.7);
}

TEST_CASE("time step rules") {
  Field f = line_field(100, 0, 1);
  for (int i = 0; i < 100; ++i) f(0, i) = std::sin(i * 0.1);
  StepConfig c;
  c.cfl = 0.1;
  CHECK(compute_dt(f, c, SystemKind::advection) == doctest::Approx(0.001));
  c.rule = CflRule::dx_to_two_thirds;
  CHECK(compute_dt(f, c, SystemKind::advection) == doctest::Approx(std::pow(0.01, 5.0 / 3.0)));
  CHECK(clip_dt(1.9995, 0.001, 2.0) == doctest::Approx(0.0005));
  CHECK(clip_dt(0.0, 0.001, 2.0) == 0.001);
}

TEST_CASE("SSP-RK3 reproduces the cubic Taylor polynomial for u' = u") {
  Field u = line_field(8, 0, 1);
  for (int i = 0; i < 8; ++i) u(0, i) = 1.0;
  const double dt = 0.1;
  ssp_rk3_step(u, dt, [](Field& v, Field& L) { L = v; });
  CHECK(u(0, 2) == doctest::Approx(1 + dt + dt * dt / 2 + dt * dt * dt / 6).epsilon(1e-14));
}

TEST_CASE("SSP-RK3 with zero rate is the identity") {
  Field u = sine_field(16);
  const Field before = u;
  ssp_rk3_step(u, 0.3, [](Field& v, Field& L) { L = Field(v.ncomp(), v.grid()); });
  for (int i = 0; i < 16; ++i) CHECK(u(0, i) == doctest::Approx(before(0, i)).epsilon(1e-15));
}

TEST_CASE("evolve lands on t_end and conserves mass") {
  Field f = sine_field(50);
  for (int i = 0; i < 50; ++i) f(0, i) += 1.0;
  const double m0 = f.interior_sum(0);
  StepConfig c = advection_cfg(make_scheme(Base::zplus, true));
  c.cfl = 0.4;
  c.t_end = 0.37;
  const auto r = evolve(f, c, SystemKind::advection);
  CHECK(r.t == 0.37);
  CHECK(std::abs(f.interior_sum(0) - m0) / m0 < 1e-13);
}

TEST_CASE("full period returns close to the initial data") {
  Field f = sine_field(80);
  const Field f0 = f;
  StepConfig c = advection_cfg(make_scheme(Base::z));
  c.rule = CflRule::dx_to_two_thirds;
  c.t_end = 1.0;
  evolve(f, c, SystemKind::advection);
  double e = 0;
  for (int i = 0; i < 80; ++i) e = std::max(e, std::abs(f(0, i) - f0(0, i)));
  CHECK(e < 1e-6);
}

TEST_CASE("non-finite data is reported as divergence") {
  Field f = sine_field(30);
  f(0, 7) = std::nan("");
  apply_bc(f);
  Field r;
  CHECK_THROWS_AS(semidiscrete_rhs(f, r, advection_cfg(make_scheme(Base::z)), SystemKind::advection),
                  SolverDiverged);
}

TEST_CASE("motionless non-constant data is rejected") {
  Field f = sine_field(10);
  StepConfig c;
  c.cfl = 0;
  CHECK_THROWS_AS(compute_dt(f, c, SystemKind::advection), UsageError);
}

TEST_CASE("componentwise and characteristic paths agree on a density wave") {
  const auto spec = problem_spec(ProblemId::euler_sine);
  Field f = init_problem(spec, 40);
  apply_bc(f);
  StepConfig a;
  a.scheme = make_scheme(Base::z);
  StepConfig b = a;
  b.recon = ReconVars::componentwise;
  Field ra, rb;
  semidiscrete_rhs(f, ra, a, SystemKind::euler1d);
  semidiscrete_rhs(f, rb, b, SystemKind::euler1d);
  for (int i = 0; i < 40; ++i) CHECK(ra(0, i) == doctest::Approx(rb(0, i)).epsilon(1e-6));
}

TEST_CASE("short 2D Riemann run stays positive") {
  const auto spec = problem_spec(ProblemId::riemann2d_cfg9);
  Field f = init_problem(spec, 24, 24);
  StepConfig c;
  c.scheme = make_scheme(Base::z, true);
  c.cfl = 0.5;
  c.t_end = 0.02;
  const auto r = evolve(f, c, SystemKind::euler2d);
  CHECK(r.steps > 0);
  CHECK(f.interior_finite());
  for (int j = 0; j < 24; ++j)
    for (int i = 0; i < 24; ++i) REQUIRE(f(0, i, j) > 0);
}
