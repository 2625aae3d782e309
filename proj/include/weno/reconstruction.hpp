#pragma once
// Fifth-order interface values from cell averages.
#include <array>
#include <type_traits>

#include "weno/weight_engine.hpp"

namespace weno {

template <class Real>
struct InterfaceStates {
  Real u_minus{};
  Real u_plus{};
};

/// Third-order candidates at x_{j+1/2} from the three 3-cell substencils.
template <class Real>
WENO_HOT std::array<Real, 3> substencil_values(const StencilWindow<Real>& w) {
  const Real a = w[0], b = w[1], c = w[2], e = w[3], f = w[4];
  return {(2 * a - 7 * b + 11 * c) / 6, (-b + 5 * c + 2 * e) / 6, (2 * c + 5 * e - f) / 6};
}

/// Weights actually used at one side, for mapping-relation scatter output.
template <class Real>
struct SideWeights {
  WeightVector<Real> js;
  WeightVector<Real> final;
};

template <Base B, bool Mop, class Real, bool Checked = true, class Prm = WeightParams<Real>>
WENO_HOT Real reconstruct_minus_t(const StencilWindow<Real>& w, const Prm& prm,
                                SideWeights<Real>* record = nullptr) {
  const auto q = substencil_values(w);
  if constexpr (B == Base::ilw) {
    constexpr auto d = ideal_weights<Real>();
    if (record) {
      record->js = weights_js(beta_js(w), prm.eps).omega;
      record->final = {d};
    }
    return d[0] * q[0] + d[1] * q[1] + d[2] * q[2];
  } else {
    const auto st = weight_state<B, Real, Prm>(w, prm);
    const auto alpha = alpha_from_state(st, Mop);
    const auto om = Checked ? normalize(alpha) : normalize_unchecked(alpha);
    if (record) {
      record->js = st.js.omega;
      record->final = om;
    }
    return om[0] * q[0] + om[1] * q[1] + om[2] * q[2];
  }
}

/// out[k] = left-biased value from u[k..k+4], k < count. Non-finite or
/// invalid weight sums surface as non-finite outputs.
template <Base B, bool Mop>
void reconstruct_line(const double* u, int count, const WeightParams<double>& prm, double* out) {
  auto run = [&](const auto& q) {
    using Q = std::decay_t<decltype(q)>;
    for (int k = 0; k < count; ++k) {
      const StencilWindow<double> w{{u[k], u[k + 1], u[k + 2], u[k + 3], u[k + 4]}};
      out[k] = reconstruct_minus_t<B, Mop, double, false, Q>(w, q);
    }
  };
  if (DefaultExponentParams<double>::applies(prm))
    run(DefaultExponentParams<double>(prm));
  else
    run(prm);
}

/// Calls f(base_tag, mop_tag) for the runtime scheme.
template <class F>
decltype(auto) with_scheme(SchemeId id, F&& f) {
  return with_base(id.base, [&](auto btag) -> decltype(auto) {
    constexpr Base B = decltype(btag)::value;
    if constexpr (is_z_type(B)) {
      if (id.mop) return f(btag, std::true_type{});
    }
    return f(btag, std::false_type{});
  });
}

template <class Real>
Real reconstruct_minus(const StencilWindow<Real>& w, SchemeId id, const WeightParams<Real>& prm,
                       SideWeights<Real>* record = nullptr) {
  return with_scheme(id, [&](auto btag, auto mtag) {
    return reconstruct_minus_t<decltype(btag)::value, decltype(mtag)::value>(w, prm, record);
  });
}

/// u6 holds u_{j-2}..u_{j+3}; the right-biased value at x_{j+1/2} uses the
/// window reflected through the interface.
template <class Real>
InterfaceStates<Real> reconstruct_pair(const std::array<Real, 6>& u6, SchemeId id,
                                       const WeightParams<Real>& prm) {
  const StencilWindow<Real> left{{u6[0], u6[1], u6[2], u6[3], u6[4]}};
  const StencilWindow<Real> right{{u6[5], u6[4], u6[3], u6[2], u6[1]}};
  return {reconstruct_minus(left, id, prm), reconstruct_minus(right, id, prm)};
}

}  // namespace weno
