#include "weno/reconstruction.hpp"
#include "weno/studies.hpp"

namespace weno {

namespace {

#if defined(WENO_HAVE_FLOAT128)
using Quad = __float128;
#else
using Quad = long double;
#endif

/// Max over cells k = -W..W (centred at k*dx) of the error in the
/// reconstructed flux difference, given the antiderivative F and f itself.
template <class Real, class Anti, class Fn>
Real flux_difference_error(SchemeId id, Real dx, int W, Anti F, Fn f) {
  const auto prm = WeightParams<Real>::for_grid(dx);
  auto edge_value = [&](Real xi) {
    StencilWindow<Real> w;
    for (int m = 0; m < 5; ++m) {
      const Real a = xi + Real(m - 3) * dx;
      w.u[m] = (F(a + dx) - F(a)) / dx;
    }
    return reconstruct_minus(w, id, prm);
  };
  Real worst = 0;
  for (int k = -W; k <= W; ++k) {
    const Real xc = Real(k) * dx, h = dx / 2;
    const Real approx = (edge_value(xc + h) - edge_value(xc - h)) / dx;
    const Real exact = (f(xc + h) - f(xc - h)) / dx;
    const Real e = rm::abs(approx - exact);
    if (e > worst) worst = e;
  }
  return worst;
}

}  // namespace

double critical_point_error(SchemeId id, double dx, int half_width) {
  auto F = [](Quad x) { return x * x * x * x / 4 + rm::sin(x); };
  auto f = [](Quad x) { return x * x * x + rm::cos(x); };
  return static_cast<double>(flux_difference_error<Quad>(id, Quad(dx), half_width, F, f));
}

double linear_profile_error(SchemeId id, double dx, int half_width) {
  auto F = [](double x) { return x * x / 2; };
  auto f = [](double x) { return x; };
  return flux_difference_error<double>(id, dx, half_width, F, f);
}

}  // namespace weno
