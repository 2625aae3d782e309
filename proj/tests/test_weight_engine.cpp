#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "weno/weight_engine.hpp"

using namespace weno;

namespace {

StencilWindow<double> win(double a, double b, double c, double d, double e) { return {{a, b, c, d, e}}; }

}  // namespace

TEST_CASE("JS weights") {
  const auto z = weights_js(SmoothnessSet<double>{{0, 0, 0}}, 1e-40);
  CHECK(z.omega[0] == doctest::Approx(0.1));
  CHECK(z.omega[1] == doctest::Approx(0.6));
  CHECK(z.omega[2] == doctest::Approx(0.3));

  const auto one = weights_js(SmoothnessSet<double>{{1, 1, 1}}, 1e-40);
  CHECK(one.omega[1] == doctest::Approx(0.6));

  const auto r = weights_js(SmoothnessSet<double>{{1, 1, 4}}, 0.0);
  CHECK(r.alpha[0] == doctest::Approx(0.1));
  CHECK(r.alpha[1] == doctest::Approx(0.6));
  CHECK(r.alpha[2] == doctest::Approx(0.01875));
  CHECK(r.alpha_sum == doctest::Approx(0.71875));
  CHECK(r.omega[2] == doctest::Approx(0.01875 / 0.71875));
}

TEST_CASE("Henrick mapping") {
  CHECK(map_henrick(0.3, 0.3) == 0.0);
  CHECK(map_henrick(0.0, 0.1) == doctest::Approx(-0.1));
  CHECK(0.1 + map_henrick(0.0, 0.1) == doctest::Approx(0.0));
  CHECK(map_henrick(1.0, 0.1) == doctest::Approx(0.9));
  CHECK(0.1 + map_henrick(1.0, 0.1) == doctest::Approx(1.0));
}

TEST_CASE("Z decomposition reproduces the native weights") {
  const auto smooth = psi_decomposition(make_scheme(Base::z), win(1, 1, 1, 1, 1), WeightParams<double>{});
  for (int s = 0; s < 3; ++s) CHECK(smooth.psi2[s] == 0.0);

  // beta = (1,1,4): window built so that beta_js yields exactly these values
  const SmoothnessSet<double> beta{{1, 1, 4}};
  const auto js = weights_js(beta, 0.0);
  const double t = tau5(beta);
  CHECK(t == 3.0);
  std::array<double, 3> alpha;
  const std::array<double, 3> d = ideal_weights<double>();
  for (int s = 0; s < 3; ++s) {
    const double psi2 = js.alpha_sum * beta[s] * beta[s] * (t / beta[s]) * (t / beta[s]);
    CHECK(psi2 == doctest::Approx(6.46875));
    alpha[s] = uniform_alpha(js.omega[s], d[s], d[s], psi2, 0.0, HKind::identity);
  }
  CHECK(alpha[0] == doctest::Approx(1.0));
  CHECK(alpha[1] == doctest::Approx(6.0));
  CHECK(alpha[2] == doctest::Approx(0.46875));
  CHECK(alpha[2] == doctest::Approx(0.3 * (1 + 9.0 / 16.0)));
}

TEST_CASE("constant window gives ideal weights for every scheme") {
  const auto prm = WeightParams<double>::for_grid(0.01);
  for (const auto& name : valid_scheme_names()) {
    const SchemeId id = parse_scheme(name);
    const auto om = scheme_weights(id, win(2, 2, 2, 2, 2), prm);
    INFO(name);
    if (id.base == Base::zplus) {
      // lambda term survives on flat data only through d * lambda * beta/tau
      CHECK(om[1] == doctest::Approx(0.6).epsilon(1e-6));
    } else {
      CHECK(om[0] == doctest::Approx(0.1));
      CHECK(om[1] == doctest::Approx(0.6));
      CHECK(om[2] == doctest::Approx(0.3));
    }
  }
}

TEST_CASE("constant window, scheme Z, raw alpha is d") {
  const auto a = raw_alpha(make_scheme(Base::z), win(4, 4, 4, 4, 4), WeightParams<double>{});
  CHECK(a[0] == doctest::Approx(0.1));
  CHECK(a[1] == doctest::Approx(0.6));
  CHECK(a[2] == doctest::Approx(0.3));
}

TEST_CASE("JS row of the decomposition returns the JS weights") {
  const auto w = win(0.1, 0.5, -0.3, 0.2, 0.8);
  const WeightParams<double> prm;
  const auto a = raw_alpha(make_scheme(Base::js), w, prm);
  const auto js = weights_js(beta_js(w), prm.eps);
  for (int s = 0; s < 3; ++s) CHECK(a[s] == js.omega[s]);
}

TEST_CASE("A falls back to linear weights") {
  const auto P = psi_decomposition(make_scheme(Base::a), win(0, 0, 0, 0, 0), WeightParams<double>{});
  for (int s = 0; s < 3; ++s) {
    CHECK(P.psi1[s] == ideal_weights<double>()[s]);
    CHECK(P.psi2[s] == 0.0);
  }
}

TEST_CASE("nearest ideal weight") {
  CHECK(nearest_ideal(0.05) == 0);
  CHECK(nearest_ideal(0.25) == 2);
  CHECK(nearest_ideal(0.45) == 1);
  CHECK(nearest_ideal(0.6) == 1);
  CHECK(nearest_ideal(0.95) == 1);
  CHECK(nearest_ideal(0.15) == 0);
}

TEST_CASE("order-preserving reassignment") {
  PsiTable<double> P;
  P.psi1 = {0.1, 0.6, 0.3};
  P.psi2 = {10, 20, 30};
  P.psi3 = {1, 2, 3};

  const WeightVector<double> smooth{{0.1, 0.6, 0.3}};
  const auto own = combine_own(smooth, P);
  const auto mop = mop_transform(smooth, P);
  for (int s = 0; s < 3; ++s) CHECK(mop[s] == own[s]);

  const WeightVector<double> swapped{{0.25, 0.6, 0.15}};
  const auto m = mop_transform(swapped, P);
  CHECK(m[0] == doctest::Approx(0.3 + 0.25 * 30 + 3));
  CHECK(m[1] == doctest::Approx(0.6 + 0.6 * 20 + 2));
  CHECK(m[2] == doctest::Approx(0.1 + 0.15 * 10 + 1));

  PsiTable<double> M = P;
  M.h = HKind::henrick;
  CHECK_THROWS_AS(mop_transform(swapped, M), UsageError);
}

TEST_CASE("normalize") {
  const auto a = normalize(std::array<double, 3>{0.1, 0.6, 0.3});
  CHECK(a[0] == doctest::Approx(0.1));
  CHECK(a[2] == doctest::Approx(0.3));
  const auto b = normalize(std::array<double, 3>{1, 1, 2});
  CHECK(b[0] == 0.25);
  CHECK(b[1] == 0.25);
  CHECK(b[2] == 0.5);
  CHECK_THROWS_AS(normalize(std::array<double, 3>{0, 0, 0}), InvalidWeights);
  CHECK_THROWS_AS(normalize(std::array<double, 3>{1, std::nan(""), 0}), InvalidWeights);
}

TEST_CASE("scheme names") {
  CHECK(scheme_name(make_scheme(Base::zplus)) == "weno-zplus");
  CHECK(scheme_name(make_scheme(Base::nip, true)) == "mop-gmweno-nip");
  CHECK(parse_scheme("mop-gmweno-zeta-tau81") == SchemeId{Base::zeta_tau81, true});
  CHECK_THROWS_AS(parse_scheme("mop-gmweno-js"), UsageError);
  CHECK_THROWS_AS(parse_scheme("mop-gmweno-m"), UsageError);
  CHECK_THROWS_AS(parse_scheme("weno-q"), UsageError);
  CHECK_THROWS_AS(make_scheme(Base::ilw, true), UsageError);
  for (const auto& n : valid_scheme_names()) CHECK(scheme_name(parse_scheme(n)) == n);
}

TEST_CASE("uniform and native weights agree on random windows") {
  std::mt19937_64 g(99);
  const auto prm = WeightParams<double>::for_grid(0.02);
  for (int i = 0; i < 3000; ++i) {
    const auto c = oracle::random_cells(g);
    const StencilWindow<double> w{{c.um2, c.um1, c.u0, c.up1, c.up2}};
    const auto z = raw_alpha(make_scheme(Base::z), w, prm);
    const auto nz = oracle::alpha_z(c, prm.eps);
    const auto zp = raw_alpha(make_scheme(Base::zplus), w, prm);
    const auto nzp = oracle::alpha_zplus(c, prm.eps, prm.lambda);
    for (int s = 0; s < 3; ++s) {
      REQUIRE(oracle::ulp_distance(z[s], nz[s]) <= 4);
      REQUIRE(oracle::ulp_distance(zp[s], nzp[s]) <= 4);
    }
  }
}

TEST_CASE("MOP keeps its own rows when JS weights sit in their own cells") {
  std::mt19937_64 g(5);
  const auto prm = WeightParams<double>::for_grid(0.02);
  int checked = 0;
  for (int i = 0; i < 5000; ++i) {
    const auto c = oracle::random_cells(g);
    const StencilWindow<double> w{{c.um2, c.um1, c.u0, c.up1, c.up2}};
    const auto st = weight_state<Base::z>(w, prm);
    bool own = true;
    for (int s = 0; s < 3; ++s) own = own && nearest_ideal(st.js.omega[s]) == s;
    if (!own) continue;
    ++checked;
    const auto a = alpha_from_state(st, true), b = alpha_from_state(st, false);
    for (int s = 0; s < 3; ++s) REQUIRE(a[s] == b[s]);
  }
  CHECK(checked > 0);
}

TEST_CASE("compile-time exponents match the runtime path") {
  std::mt19937_64 g(8);
  const auto prm = WeightParams<double>::for_grid(0.01);
  const DefaultExponentParams<double> fixed(prm);
  for (int i = 0; i < 1000; ++i) {
    const auto c = oracle::random_cells(g);
    const StencilWindow<double> w{{c.um2, c.um1, c.u0, c.up1, c.up2}};
    const auto a = weight_state<Base::nip>(w, prm);
    const auto b = weight_state<Base::nip, double, DefaultExponentParams<double>>(w, fixed);
    for (int s = 0; s < 3; ++s) REQUIRE(a.psi.psi2[s] == b.psi.psi2[s]);
  }
}
