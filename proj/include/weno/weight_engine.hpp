#pragma once
// Nonlinear weights through the uniform decomposition
//   alpha_s = psi1_s + H(omega_js_s) * psi2_s + psi3_s
// and the order-preserving row reassignment.
#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weno/errors.hpp"
#include "weno/stencil_core.hpp"

namespace weno {

enum class Base { js, m, z, zeta_tau5, zeta_tau81, zplus, za, d, a, nip, ilw };

inline constexpr std::array<Base, 8> kZTypeBases = {Base::z,  Base::zeta_tau5, Base::zeta_tau81,
                                                    Base::zplus, Base::za,     Base::d,
                                                    Base::a,  Base::nip};

constexpr bool is_z_type(Base b) {
  return b != Base::js && b != Base::m && b != Base::ilw;
}

struct SchemeId {
  Base base = Base::z;
  bool mop = false;

  friend bool operator==(const SchemeId&, const SchemeId&) = default;
};

/// Checked constructor: the reassignment is only defined for Z-type weights.
SchemeId make_scheme(Base base, bool mop = false);

/// Lowercase hyphenated name, e.g. "weno-zplus" or "mop-gmweno-nip".
std::string scheme_name(SchemeId id);
/// Inverse of scheme_name; throws UsageError listing valid names.
SchemeId parse_scheme(std::string_view name);
std::vector<std::string> valid_scheme_names();

template <class Real>
constexpr std::array<Real, 3> ideal_weights() {
  return {Real(1) / Real(10), Real(3) / Real(5), Real(3) / Real(10)};
}

template <class Real>
struct WeightParams {
  Real eps = Real(1e-40);
  int p = 2;
  Real lambda = Real(0);  // Z+ only; usually dx^(2/3)
  NipParams<Real> nip{};

  static WeightParams for_grid(Real dx) {
    WeightParams w;
    w.lambda = rm::pow(dx, Real(2) / Real(3));
    return w;
  }
};

/// Default exponents fixed at compile time so the flux loops vectorize.
template <class Real>
struct DefaultExponentParams {
  struct Nip {
    Real theta;
    static constexpr Real J = Real(1.5);
  };
  Real eps;
  static constexpr int p = 2;
  Real lambda;
  Nip nip;

  explicit DefaultExponentParams(const WeightParams<Real>& w) : eps(w.eps), lambda(w.lambda), nip{w.nip.theta} {}
  static bool applies(const WeightParams<Real>& w) { return w.p == 2 && w.nip.J == Real(1.5); }
};

enum class HKind { identity, henrick, raw_js };

template <class Real>
struct PsiTable {
  std::array<Real, 3> psi1{}, psi2{}, psi3{};
  HKind h = HKind::identity;
};

template <class Real>
struct WeightVector {
  std::array<Real, 3> omega{};
  constexpr Real operator[](int s) const { return omega[s]; }
};

template <class Real>
struct JsWeights {
  WeightVector<Real> omega;
  std::array<Real, 3> alpha{};
  Real alpha_sum{};
};

namespace detail {
[[noreturn, gnu::cold, gnu::noinline]] inline void bad_weight_sum() {
  throw InvalidWeights("non-positive or non-finite weight sum");
}
}  // namespace detail

template <class Real>
WENO_HOT WeightVector<Real> normalize(const std::array<Real, 3>& alpha) {
  const Real sum = alpha[0] + alpha[1] + alpha[2];
  if (!(sum > 0) || !rm::isfinite(sum)) [[unlikely]]
    detail::bad_weight_sum();
  const Real inv = Real(1) / sum;
  return {{alpha[0] * inv, alpha[1] * inv, alpha[2] * inv}};
}

/// Same division without the validity check; callers test the result.
template <class Real>
WENO_HOT WeightVector<Real> normalize_unchecked(const std::array<Real, 3>& alpha) {
  const Real inv = Real(1) / (alpha[0] + alpha[1] + alpha[2]);
  return {{alpha[0] * inv, alpha[1] * inv, alpha[2] * inv}};
}

template <class Real>
WENO_HOT JsWeights<Real> weights_js(const SmoothnessSet<Real>& beta, Real eps,
                           const std::array<Real, 3>& d = ideal_weights<Real>()) {
  JsWeights<Real> r;
  for (int s = 0; s < 3; ++s) {
    const Real q = eps + beta[s];
    r.alpha[s] = d[s] / (q * q);
  }
  r.alpha_sum = r.alpha[0] + r.alpha[1] + r.alpha[2];
  for (int s = 0; s < 3; ++s) r.omega.omega[s] = r.alpha[s] / r.alpha_sum;
  return r;
}

/// Henrick's mapping without the additive ideal weight:
/// (w-d)^3 / ((w-d)^2 + w(1-w)), continued by 0 where the denominator vanishes.
template <class Real>
WENO_HOT Real map_henrick(Real w, Real d) {
  const Real g = w - d;
  const Real den = g * g + w * (Real(1) - w);
  if (den == Real(0)) return Real(0);
  return g * g * g / den;
}

/// Index of the ideal weight nearest to w, scanning 0,1,2 and moving only on
/// strict improvement.
template <class Real>
WENO_HOT int nearest_ideal(Real w, const std::array<Real, 3>& d = ideal_weights<Real>()) {
  Real dmin = rm::abs(w - d[0]);
  int l = 0;
  for (int j = 1; j < 3; ++j) {
    const Real g = w - d[j];
    const bool closer = (-dmin < g) & (g < dmin);
    dmin = closer ? rm::abs(g) : dmin;
    l = closer ? j : l;
  }
  return l;
}

/// Position of ideal weight index l when the ideal weights are sorted.
constexpr int ideal_rank(int l) {
  constexpr int rank[3] = {0, 2, 1};
  return rank[l];
}

/// Everything the uniform formula needs at one interface side.
template <class Real>
struct WeightState {
  JsWeights<Real> js;
  PsiTable<Real> psi;
};

template <class Real>
WENO_HOT Real uniform_alpha(Real omega_js, Real d, Real psi1, Real psi2, Real psi3, HKind h) {
  const Real H = h == HKind::henrick ? map_henrick(omega_js, d) : omega_js;
  return psi1 + H * psi2 + psi3;
}

template <Base B, class Real, class Prm = WeightParams<Real>>
WENO_HOT WeightState<Real> weight_state(const StencilWindow<Real>& w, const Prm& prm) {
  constexpr auto d = ideal_weights<Real>();
  WeightState<Real> st;
  const auto beta = beta_js(w);
  st.js = weights_js(beta, prm.eps, d);
  const Real S = st.js.alpha_sum;
  const Real eps = prm.eps;
  auto& P = st.psi;

  if constexpr (B == Base::js) {
    P.h = HKind::raw_js;
    P.psi2 = {Real(1), Real(1), Real(1)};
  } else if constexpr (B == Base::m) {
    P.h = HKind::henrick;
    P.psi1 = d;
    P.psi2 = {Real(1), Real(1), Real(1)};
  } else if constexpr (B == Base::ilw) {
    P.psi1 = d;
  } else if constexpr (B == Base::z) {
    const Real t = tau5(beta);
    P.psi1 = d;
    for (int s = 0; s < 3; ++s) {
      const Real bp = beta[s] + eps;
      P.psi2[s] = (S * (bp * bp)) * rm::ipow(t / bp, prm.p);
    }
  } else if constexpr (B == Base::zeta_tau5 || B == Base::zeta_tau81) {
    const auto eta = eta_shen_zha(w);
    const Real t = B == Base::zeta_tau5 ? tau5(eta) : tau81(w);
    P.psi1 = d;
    for (int s = 0; s < 3; ++s) {
      const Real bp = beta[s] + eps, r = t / (eta[s] + eps);
      P.psi2[s] = (S * (bp * bp)) * (r * r);
    }
  } else if constexpr (B == Base::zplus) {
    const Real tp = tau5(beta) + eps;
    P.psi1 = d;
    for (int s = 0; s < 3; ++s) {
      const Real bp = beta[s] + eps, r = tp / bp;
      P.psi2[s] = (S * (bp * bp)) * (r * r);
      P.psi3[s] = d[s] * (prm.lambda * (bp / tp));
    }
  } else if constexpr (B == Base::za) {
    const auto bza = beta_za(w);
    const Real t6 = tau6_za(w);
    const Real A = a_za(bza, t6, eps).value;
    P.psi1 = d;
    for (int s = 0; s < 3; ++s) {
      const Real bp = beta[s] + eps;
      P.psi2[s] = (S * (bp * bp)) * (A * t6 / (bza[s] + eps));
    }
  } else if constexpr (B == Base::d || B == Base::a) {
    const Real t = tau5(beta);
    const Real phi = phi_d(beta);
    for (int s = 0; s < 3; ++s) {
      const Real bp = beta[s] + eps;
      const Real g = phi * rm::ipow(t / bp, prm.p);
      const Real lifted = (S * (bp * bp)) * g;
      if constexpr (B == Base::d) {
        P.psi1[s] = d[s];
        P.psi2[s] = lifted;
      } else {
        const bool linear = g <= Real(1);
        P.psi1[s] = linear ? d[s] : Real(0);
        P.psi2[s] = linear ? Real(0) : lifted;
      }
    }
  } else if constexpr (B == Base::nip) {
    const auto chi = chi_nip(w, prm.nip.theta);
    const Real t = tau_nip(w, prm.nip.J);
    P.psi1 = d;
    for (int s = 0; s < 3; ++s) {
      const Real bp = beta[s] + eps, cp = eps + chi[s];
      P.psi2[s] = (S * (bp * bp)) * (t / (cp * cp));
    }
  }
  return st;
}

/// Calls f(std::integral_constant<Base, b>{}) for the runtime value b.
template <class F>
decltype(auto) with_base(Base b, F&& f) {
  switch (b) {
    case Base::js: return f(std::integral_constant<Base, Base::js>{});
    case Base::m: return f(std::integral_constant<Base, Base::m>{});
    case Base::z: return f(std::integral_constant<Base, Base::z>{});
    case Base::zeta_tau5: return f(std::integral_constant<Base, Base::zeta_tau5>{});
    case Base::zeta_tau81: return f(std::integral_constant<Base, Base::zeta_tau81>{});
    case Base::zplus: return f(std::integral_constant<Base, Base::zplus>{});
    case Base::za: return f(std::integral_constant<Base, Base::za>{});
    case Base::d: return f(std::integral_constant<Base, Base::d>{});
    case Base::a: return f(std::integral_constant<Base, Base::a>{});
    case Base::nip: return f(std::integral_constant<Base, Base::nip>{});
    case Base::ilw: return f(std::integral_constant<Base, Base::ilw>{});
  }
  throw std::invalid_argument("unknown scheme base");
}

template <class Real>
WeightState<Real> weight_state(Base b, const StencilWindow<Real>& w, const WeightParams<Real>& prm) {
  return with_base(b, [&](auto tag) { return weight_state<decltype(tag)::value>(w, prm); });
}

template <class Real>
PsiTable<Real> psi_decomposition(SchemeId id, const StencilWindow<Real>& w,
                                 const WeightParams<Real>& prm) {
  return weight_state(id.base, w, prm).psi;
}

/// Uniform formula with every substencil keeping its own row.
template <class Real>
WENO_HOT std::array<Real, 3> combine_own(const WeightVector<Real>& wjs, const PsiTable<Real>& P,
                                const std::array<Real, 3>& d = ideal_weights<Real>()) {
  std::array<Real, 3> a;
  for (int s = 0; s < 3; ++s) a[s] = uniform_alpha(wjs[s], d[s], P.psi1[s], P.psi2[s], P.psi3[s], P.h);
  return a;
}

/// Each substencil takes the psi row of the ideal weight nearest to its own
/// JS weight; the JS weight itself stays in place.
template <class Real>
WENO_HOT std::array<Real, 3> mop_transform(const WeightVector<Real>& wjs, const PsiTable<Real>& P,
                                  const std::array<Real, 3>& d = ideal_weights<Real>()) {
  if (P.h != HKind::identity) throw UsageError("order-preserving reassignment needs Z-type weights");
  std::array<Real, 3> a;
  for (int s = 0; s < 3; ++s) {
    const int l = nearest_ideal(wjs[s], d);
    a[s] = uniform_alpha(wjs[s], d[l], P.psi1[l], P.psi2[l], P.psi3[l], P.h);
  }
  return a;
}

template <class Real>
WENO_HOT std::array<Real, 3> alpha_from_state(const WeightState<Real>& st, bool mop) {
  return mop ? mop_transform(st.js.omega, st.psi) : combine_own(st.js.omega, st.psi);
}

template <class Real>
std::array<Real, 3> raw_alpha(SchemeId id, const StencilWindow<Real>& w, const WeightParams<Real>& prm) {
  return alpha_from_state(weight_state(id.base, w, prm), id.mop);
}

template <class Real>
WeightVector<Real> scheme_weights(SchemeId id, const StencilWindow<Real>& w, const WeightParams<Real>& prm) {
  return normalize(raw_alpha(id, w, prm));
}

}  // namespace weno
