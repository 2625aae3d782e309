#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "weno/metrics.hpp"
#include "weno/problems.hpp"
#include "weno/studies.hpp"

using namespace weno;

TEST_CASE("square wave cell averages") {
  const auto spec = problem_spec(ProblemId::square_wave);
  const Field f = init_problem(spec, 8);
  for (int i = 0; i < 4; ++i) CHECK(f(0, i) == 1.0);
  for (int i = 4; i < 8; ++i) CHECK(f(0, i) == 0.0);
}

TEST_CASE("SLP plateau averages to one") {
  const auto spec = problem_spec(ProblemId::slp);
  CHECK(exact_cell_average(spec, -0.4, -0.2, 0.0) == doctest::Approx(1.0));
  CHECK(exact_cell_average(spec, -0.35, -0.3, 0.0) == doctest::Approx(1.0));
  CHECK(exact_solution(spec, 0.1, 0.0) == doctest::Approx(1.0));
  CHECK(exact_solution(spec, 0.9, 0.0) == 0.0);
}

TEST_CASE("exact solution is periodic in time") {
  const auto spec = problem_spec(ProblemId::square_wave);
  for (double x : {-0.9, -0.3, 0.2, 0.7}) {
    CHECK(exact_solution(spec, x, 4.0) == exact_solution(spec, x, 0.0));
    CHECK(exact_cell_average(spec, x, x + 0.05, 2.0) == doctest::Approx(exact_cell_average(spec, x, x + 0.05, 0.0)));
  }
  // a half period moves the step to the other side
  CHECK(exact_solution(spec, 0.5, 1.0) == 1.0);
}

TEST_CASE("2D problems have no closed form") {
  CHECK_THROWS_AS(exact_solution(problem_spec(ProblemId::riemann2d_cfg9), 0.1, 0.1), NoExactSolution);
  CHECK_THROWS_AS(initial_bounds(problem_spec(ProblemId::shock_vortex)), NoExactSolution);
}

TEST_CASE("problem names round trip") {
  for (const auto& n : valid_problem_names()) CHECK(problem_name(parse_problem(n)) == n);
  CHECK_THROWS_AS(parse_problem("nope"), UsageError);
}

TEST_CASE("error norms") {
  const std::vector<double> u{1, 2, 3};
  const auto z = error_norms(u, u, 0.1);
  CHECK(z.l1 == 0.0);
  CHECK(z.linf == 0.0);
  const auto e = error_norms(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2.5, 2}, 0.5);
  CHECK(e.l1 == doctest::Approx(0.75));
  CHECK(e.linf == 1.0);
}

TEST_CASE("convergence orders") {
  const auto o = convergence_orders({1.6e-3, 1e-4}, {10, 20});
  CHECK(std::isnan(o[0]));
  CHECK(o[1] == doctest::Approx(4.0));
}

TEST_CASE("increased errors") {
  ErrorReport js, ilw;
  js.l1 = 7.93589e-2;
  ilw.l1 = 5.39974e-3;
  js.linf = ilw.linf = 1;
  const auto r = increased_errors(js, ilw);
  CHECK(r.chi1 == doctest::Approx(1370).epsilon(0.001));
  CHECK(r.chi_inf == 0.0);
}

TEST_CASE("oscillation metric") {
  const auto ramp = oscillation_metric({0, 0.25, 0.5, 0.75, 1}, 0, 1);
  CHECK(ramp.overshoot == 0.0);
  CHECK(ramp.undershoot == 0.0);
  CHECK(ramp.tv == 1.0);

  const auto sq = oscillation_metric({1, 1, 0, 0}, 0, 1, true);
  CHECK(sq.tv == 2.0);

  std::vector<double> s(400);
  for (int i = 0; i < 400; ++i) s[i] = 0.3 * std::sin(2 * std::numbers::pi * i / 400.0);
  CHECK(oscillation_metric(s, -1, 1, true).tv == doctest::Approx(4 * 0.3).epsilon(1e-4));

  const auto bump = oscillation_metric({-0.1, 0.5, 1.2}, 0, 1);
  CHECK(bump.overshoot == doctest::Approx(0.2));
  CHECK(bump.undershoot == doctest::Approx(0.1));
}

TEST_CASE("critical-point measurement") {
  for (Base b : {Base::js, Base::z, Base::nip, Base::ilw}) {
    CHECK(linear_profile_error(make_scheme(b), 0.01) <= 1e-13);
  }
  const double ilw = critical_point_error(make_scheme(Base::ilw), 0.0125);
  CHECK(ilw > 2.72851e-12);
  CHECK(ilw < 2.72851e-10);
  const double e1 = critical_point_error(make_scheme(Base::z), 0.00625);
  const double e2 = critical_point_error(make_scheme(Base::z), 0.003125);
  CHECK(std::log2(e1 / e2) == doctest::Approx(5.51).epsilon(0.3 / 5.51));
}

TEST_CASE("study definitions") {
  const auto c = default_study("critical");
  CHECK(c.ns.size() == 4);
  const auto e = default_study("euler_ic1");
  CHECK(e.ns == std::vector<int>{10, 20, 40, 80, 160, 320});
  CHECK_THROWS_AS(default_study("bogus"), UsageError);
}

TEST_CASE("empty scheme list gives an empty table") {
  auto s = default_study("euler_ic1");
  s.schemes.clear();
  CHECK(run_table(s).empty());
}

TEST_CASE("table CSV layout") {
  TableRow r;
  r.scheme = "weno-z";
  r.n = 40;
  r.dx = 0.05;
  r.l1 = 5.94e-6;
  r.l1_order = std::nan("");
  std::ostringstream os;
  write_table_csv(os, {r});
  const std::string s = os.str();
  CHECK(s.rfind("scheme,N,dx,L1,L1_order,Linf,Linf_order,chi1,chi_inf\n", 0) == 0);
  CHECK(s.find("weno-z,40,") != std::string::npos);
  CHECK(s.find("NA") != std::string::npos);
}

TEST_CASE("small sweep converges") {
  const auto spec = problem_spec(ProblemId::euler_sine);
  StepConfig base = default_step_config(spec, make_scheme(Base::z));
  base.t_end = 0.2;
  const auto rows = run_sweep(spec, {make_scheme(Base::z), make_scheme(Base::z, true)}, {20, 40}, base, 2);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1].l1_order > 4.0);
  CHECK(rows[1].l1 < rows[0].l1);
}

TEST_CASE("parallel_for runs every job once") {
  std::vector<int> hits(37, 0);
  parallel_for(37, 4, [&](int i) { ++hits[i]; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("case runs are deterministic") {
  const auto spec = problem_spec(ProblemId::slp);
  StepConfig c = default_step_config(spec, make_scheme(Base::nip, true));
  c.t_end = 0.05;
  const auto a = run_case(spec, c, 100), b = run_case(spec, c, 100);
  CHECK(a.field.raw() == b.field.raw());
  CHECK(a.run.steps == b.run.steps);
  CHECK(a.has_error);
}
