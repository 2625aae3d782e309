#include <random>
#include <vector>

#include "doctest.h"
#include "weno/reconstruction.hpp"

using namespace weno;

namespace {

// Cell average of a polynomial (coefficients c0 + c1 x + c2 x^2) over [a, b].
double poly_average(const std::array<double, 3>& c, double a, double b) {
  auto F = [&](double x) { return c[0] * x + c[1] * x * x / 2 + c[2] * x * x * x / 3; };
  return (F(b) - F(a)) / (b - a);
}

StencilWindow<double> unit_cells(const std::array<double, 3>& c) {
  StencilWindow<double> w;
  for (int m = 0; m < 5; ++m) w.u[m] = poly_average(c, m - 2 - 0.5, m - 2 + 0.5);
  return w;
}

}  // namespace

TEST_CASE("substencil values") {
  const auto k = substencil_values(StencilWindow<double>{{3, 3, 3, 3, 3}});
  for (double v : k) CHECK(v == doctest::Approx(3.0));

  const auto lin = substencil_values(unit_cells({0, 1, 0}));
  for (double v : lin) CHECK(v == doctest::Approx(0.5));

  const auto quad = substencil_values(unit_cells({0, 0, 1}));
  for (double v : quad) CHECK(v == doctest::Approx(0.25));

  const auto mixed = substencil_values(unit_cells({0.3, -1.2, 2.5}));
  for (double v : mixed) CHECK(v == doctest::Approx(0.3 - 1.2 * 0.5 + 2.5 * 0.25));
}

TEST_CASE("constant data reconstructs exactly for every scheme") {
  const auto prm = WeightParams<double>::for_grid(0.01);
  for (const auto& name : valid_scheme_names()) {
    const SchemeId id = parse_scheme(name);
    INFO(name);
    CHECK(reconstruct_minus(StencilWindow<double>{{1.5, 1.5, 1.5, 1.5, 1.5}}, id, prm) == doctest::Approx(1.5));
    const auto pr = reconstruct_pair(std::array<double, 6>{2, 2, 2, 2, 2, 2}, id, prm);
    CHECK(pr.u_minus == doctest::Approx(2.0));
    CHECK(pr.u_plus == doctest::Approx(2.0));
  }
}

TEST_CASE("data symmetric about the interface gives equal sides") {
  const auto prm = WeightParams<double>::for_grid(0.01);
  const std::array<double, 6> u6{0.1, 0.9, -0.4, -0.4, 0.9, 0.1};
  for (const auto& name : valid_scheme_names()) {
    INFO(name);
    const auto pr = reconstruct_pair(u6, parse_scheme(name), prm);
    CHECK(pr.u_minus == pr.u_plus);
  }
}

TEST_CASE("reconstruction is homogeneous and translation invariant") {
  std::mt19937_64 g(31);
  std::uniform_real_distribution<double> U(-1, 1);
  const auto prm = WeightParams<double>::for_grid(0.01);
  for (const auto& name : valid_scheme_names()) {
    const SchemeId id = parse_scheme(name);
    INFO(name);
    // the lambda term, the capped Phi and the 1.5 power are not scale free
    const bool scale_free = id.base != Base::zplus && id.base != Base::d && id.base != Base::a && id.base != Base::nip;
    for (int i = 0; i < 50; ++i) {
      StencilWindow<double> w, w2, ws;
      for (int m = 0; m < 5; ++m) {
        w.u[m] = U(g);
        w2.u[m] = 2 * w.u[m];
        ws.u[m] = w.u[m] + 0.25;
      }
      const double r = reconstruct_minus(w, id, prm);
      if (scale_free) CHECK(reconstruct_minus(w2, id, prm) == doctest::Approx(2 * r).epsilon(1e-12));
      CHECK(reconstruct_minus(ws, id, prm) == doctest::Approx(r + 0.25).epsilon(1e-9));
    }
  }
}

TEST_CASE("reconstructed value lies between substencil values") {
  std::mt19937_64 g(3);
  std::uniform_real_distribution<double> U(-1, 1);
  const auto prm = WeightParams<double>::for_grid(0.01);
  for (int i = 0; i < 500; ++i) {
    StencilWindow<double> w;
    for (int m = 0; m < 5; ++m) w.u[m] = U(g);
    const auto q = substencil_values(w);
    const double lo = std::min({q[0], q[1], q[2]}), hi = std::max({q[0], q[1], q[2]});
    const double r = reconstruct_minus(w, make_scheme(Base::z, true), prm);
    CHECK(r >= lo - 1e-12);
    CHECK(r <= hi + 1e-12);
  }
}

TEST_CASE("batched line kernel agrees with the per-window form") {
  std::mt19937_64 g(17);
  std::uniform_real_distribution<double> U(-1, 1);
  std::vector<double> u(64), out(60);
  for (double& v : u) v = U(g);
  for (bool custom : {false, true}) {
    auto prm = WeightParams<double>::for_grid(0.05);
    if (custom) prm.p = 1;
    with_scheme(make_scheme(Base::nip, true), [&](auto bt, auto mt) {
      reconstruct_line<decltype(bt)::value, decltype(mt)::value>(u.data(), 60, prm, out.data());
    });
    for (int k = 0; k < 60; ++k) {
      const StencilWindow<double> w{{u[k], u[k + 1], u[k + 2], u[k + 3], u[k + 4]}};
      REQUIRE(out[k] == reconstruct_minus(w, make_scheme(Base::nip, true), prm));
    }
  }
}

TEST_CASE("weight recording") {
  SideWeights<double> rec;
  const StencilWindow<double> w{{1, 1, 1, 1, 1}};
  reconstruct_minus(w, make_scheme(Base::z), WeightParams<double>{}, &rec);
  CHECK(rec.js[1] == doctest::Approx(0.6));
  CHECK(rec.final[1] == doctest::Approx(0.6));
}
