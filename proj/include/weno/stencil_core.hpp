#pragma once
// Local and global smoothness indicators on a five-cell window.
#include <array>
#include <stdexcept>
#include <string_view>

#include "weno/real_math.hpp"

namespace weno {

/// Cell averages u_{j-2}..u_{j+2}; u[2] is cell j.  The left-biased value is
/// reconstructed at x_{j+1/2}.
template <class Real>
struct StencilWindow {
  std::array<Real, 5> u{};

  constexpr Real operator[](int k) const { return u[k]; }

  /// Window reflected through cell j (used for the right-biased side).
  constexpr StencilWindow reversed() const { return {{u[4], u[3], u[2], u[1], u[0]}}; }
};

enum class IndicatorFamily { beta_js, eta, beta_za, chi_nip };

template <class Real>
struct SmoothnessSet {
  std::array<Real, 3> v{};
  IndicatorFamily family = IndicatorFamily::beta_js;

  constexpr Real operator[](int s) const { return v[s]; }
};

enum class GlobalKind { tau5_js, tau5_eta, tau6_eta, tau81, tau82, tau6_za, a_za, phi_d, tau_nip };

std::string_view to_string(GlobalKind k);

template <class Real>
struct GlobalIndicator {
  Real value{};
  GlobalKind kind = GlobalKind::tau5_js;
  bool clamped = false;  // A_za denominator was non-positive
};

/// Parameters of the NIP indicators.
template <class Real>
struct NipParams {
  Real theta = Real(0.1);
  Real J = Real(1.5);
};

inline constexpr double kGammaZa1 = 1.0;
inline constexpr double kGammaZa2 = 13.0 / 12.0;

template <class Real>
WENO_HOT SmoothnessSet<Real> beta_js(const StencilWindow<Real>& w) {
  const Real a = w[0], b = w[1], c = w[2], e = w[3], f = w[4];
  const Real k13 = Real(13) / Real(12), q = Real(1) / Real(4);
  const Real s0 = a - 2 * b + c, t0 = a - 4 * b + 3 * c;
  const Real s1 = b - 2 * c + e, t1 = b - e;
  const Real s2 = c - 2 * e + f, t2 = 3 * c - 4 * e + f;
  return {{k13 * (s0 * s0) + q * (t0 * t0), k13 * (s1 * s1) + q * (t1 * t1),
           k13 * (s2 * s2) + q * (t2 * t2)},
          IndicatorFamily::beta_js};
}

template <class Real>
WENO_HOT SmoothnessSet<Real> eta_shen_zha(const StencilWindow<Real>& w) {
  const Real a = w[0], b = w[1], c = w[2], e = w[3], f = w[4];
  const Real q = Real(1) / Real(4);
  const Real t0 = a - 4 * b + 3 * c, s0 = a - 2 * b + c;
  const Real t1 = b - e, s1 = b - 2 * c + e;
  const Real t2 = 3 * c - 4 * e + f, s2 = c - 2 * e + f;
  return {{q * (t0 * t0) + s0 * s0, q * (t1 * t1) + s1 * s1, q * (t2 * t2) + s2 * s2},
          IndicatorFamily::eta};
}

/// First and second undivided differences of the ZA indicator.
template <class Real>
struct ZaDifferences {
  std::array<Real, 3> d1, d2;
};

template <class Real>
WENO_HOT ZaDifferences<Real> za_differences(const StencilWindow<Real>& w) {
  const Real a = w[0], b = w[1], c = w[2], e = w[3], f = w[4];
  return {{(a - 4 * b + 3 * c) / 2, (-b + e) / 2, (-3 * c + 4 * e - f) / 2},
          {a - 2 * b + c, b - 2 * c + e, c - 2 * e + f}};
}

template <class Real>
WENO_HOT SmoothnessSet<Real> beta_za(const StencilWindow<Real>& w) {
  const auto z = za_differences(w);
  const Real g1 = Real(kGammaZa1), g2 = Real(13) / Real(12);
  SmoothnessSet<Real> r{{}, IndicatorFamily::beta_za};
  for (int s = 0; s < 3; ++s) r.v[s] = g1 * (z.d1[s] * z.d1[s]) + g2 * (z.d2[s] * z.d2[s]);
  return r;
}

template <class Real>
WENO_HOT SmoothnessSet<Real> chi_nip(const StencilWindow<Real>& w, Real theta) {
  const Real a = w[0], b = w[1], c = w[2], e = w[3], f = w[4];
  const Real jump = rm::abs(e - c);
  return {{theta * rm::abs(a - 3 * b + 2 * c) + rm::abs(a - 2 * b + c),
           theta * jump + rm::abs(b - 2 * c + e), theta * jump + rm::abs(c - 2 * e + f)},
          IndicatorFamily::chi_nip};
}

// Individual global indicators.

template <class Real>
WENO_HOT Real tau5(const SmoothnessSet<Real>& l) {
  return rm::abs(l[0] - l[2]);
}

template <class Real>
WENO_HOT Real eta5(const StencilWindow<Real>& w) {
  const Real a = w[0], b = w[1], c = w[2], e = w[3], f = w[4];
  const Real r = a - 8 * b + 8 * e - f;
  const Real s = a - 16 * b + 30 * c - 16 * e + f;
  return (r * r + s * s) / Real(144);
}

template <class Real>
WENO_HOT Real tau6_eta(const StencilWindow<Real>& w, const SmoothnessSet<Real>& eta) {
  return rm::abs(eta5(w) - (eta[0] + 4 * eta[1] + eta[2]) / 6);
}

/// The two factors shared by the eighth-order indicators.
template <class Real>
struct Tau8Factors {
  Real slope_gap;   // |P0^(1)| - |P2^(1)|
  Real curvature;   // P0^(2) - 2 P1^(2) + P2^(2)
};

template <class Real>
WENO_HOT Tau8Factors<Real> tau8_factors(const StencilWindow<Real>& w) {
  const Real a = w[0], b = w[1], c = w[2], e = w[3], f = w[4];
  const Real h = Real(1) / Real(2), th = Real(3) / Real(2);
  const Real p10 = h * a - 2 * b + th * c;
  const Real p12 = -th * c + 2 * e - h * f;
  const Real p20 = a - 2 * b + c, p21 = b - 2 * c + e, p22 = c - 2 * e + f;
  return {rm::abs(p10) - rm::abs(p12), p20 - 2 * p21 + p22};
}

template <class Real>
WENO_HOT Real tau81(const StencilWindow<Real>& w) {
  const auto t = tau8_factors(w);
  return rm::abs(t.slope_gap * t.curvature);
}

template <class Real>
WENO_HOT Real tau82(const StencilWindow<Real>& w) {
  const auto t = tau8_factors(w);
  return t.slope_gap * t.slope_gap + t.curvature * t.curvature;
}

template <class Real>
WENO_HOT Real tau6_za(const StencilWindow<Real>& w) {
  const auto z = za_differences(w);
  const Real g1 = Real(kGammaZa1), g2 = Real(13) / Real(12);
  const Real r = rm::abs(z.d1[0]) - rm::abs(z.d1[2]);
  const Real s = rm::abs(z.d2[0]) - rm::abs(z.d2[2]);
  return g1 * (r * r) + g2 * (s * s);
}

/// ZA amplitude; a non-positive denominator yields 0 with `clamped` set.
template <class Real>
WENO_HOT GlobalIndicator<Real> a_za(const SmoothnessSet<Real>& bza, Real tau6, Real eps) {
  const Real den = bza[0] + bza[2] - tau6 + eps;
  if (!(den > 0)) return {Real(0), GlobalKind::a_za, true};
  return {tau6 / den, GlobalKind::a_za, false};
}

template <class Real>
WENO_HOT Real phi_d(const SmoothnessSet<Real>& beta) {
  const Real phi = rm::sqrt(rm::abs(beta[0] - 2 * beta[1] + beta[2]));
  return phi < Real(1) ? phi : Real(1);
}

template <class Real>
WENO_HOT Real tau_nip(const StencilWindow<Real>& w, Real J) {
  const Real a = w[0], b = w[1], c = w[2], e = w[3], f = w[4];
  return rm::abs_pow(a - 4 * b + 6 * c - 4 * e + f, J);
}

/// Dispatching form.  `local` must belong to the family the kind expects:
/// eta for tau5_eta/tau6_eta, beta_za for a_za, beta_js for tau5_js/phi_d;
/// the remaining kinds read only the window.
template <class Real>
GlobalIndicator<Real> global_indicator(GlobalKind kind, const StencilWindow<Real>& w,
                                       const SmoothnessSet<Real>& local, Real eps,
                                       const NipParams<Real>& nip = {}) {
  auto need = [&](IndicatorFamily fam) {
    if (local.family != fam) throw std::invalid_argument("indicator family does not match kind");
  };
  switch (kind) {
    case GlobalKind::tau5_js: need(IndicatorFamily::beta_js); return {tau5(local), kind};
    case GlobalKind::tau5_eta: need(IndicatorFamily::eta); return {tau5(local), kind};
    case GlobalKind::tau6_eta: need(IndicatorFamily::eta); return {tau6_eta(w, local), kind};
    case GlobalKind::tau81: return {tau81(w), kind};
    case GlobalKind::tau82: return {tau82(w), kind};
    case GlobalKind::tau6_za: return {tau6_za(w), kind};
    case GlobalKind::a_za: need(IndicatorFamily::beta_za); return a_za(local, tau6_za(w), eps);
    case GlobalKind::phi_d: need(IndicatorFamily::beta_js); return {phi_d(local), kind};
    case GlobalKind::tau_nip: return {tau_nip(w, nip.J), kind};
  }
  throw std::invalid_argument("unknown global indicator kind");
}

}  // namespace weno
