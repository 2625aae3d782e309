#include <array>
#include <string>
#include <utility>

#include "weno/weight_engine.hpp"

namespace weno {

namespace {

constexpr std::array<std::pair<Base, const char*>, 11> kNames = {{
    {Base::js, "js"},
    {Base::m, "m"},
    {Base::z, "z"},
    {Base::zeta_tau5, "zeta-tau5"},
    {Base::zeta_tau81, "zeta-tau81"},
    {Base::zplus, "zplus"},
    {Base::za, "za"},
    {Base::d, "d"},
    {Base::a, "a"},
    {Base::nip, "nip"},
    {Base::ilw, "ilw"},
}};

}  // namespace

std::string_view to_string(GlobalKind k) {
  switch (k) {
    case GlobalKind::tau5_js: return "tau5_js";
    case GlobalKind::tau5_eta: return "tau5_eta";
    case GlobalKind::tau6_eta: return "tau6_eta";
    case GlobalKind::tau81: return "tau81";
    case GlobalKind::tau82: return "tau82";
    case GlobalKind::tau6_za: return "tau6_za";
    case GlobalKind::a_za: return "A_za";
    case GlobalKind::phi_d: return "phi_d";
    case GlobalKind::tau_nip: return "tau_nip";
  }
  return "?";
}

SchemeId make_scheme(Base base, bool mop) {
  if (mop && !is_z_type(base))
    throw UsageError("order-preserving variant is defined only for Z-type weights");
  return {base, mop};
}

std::string scheme_name(SchemeId id) {
  for (const auto& [b, n] : kNames)
    if (b == id.base) return std::string(id.mop ? "mop-gmweno-" : "weno-") + n;
  return "unknown";
}

std::vector<std::string> valid_scheme_names() {
  std::vector<std::string> out;
  for (const auto& [b, n] : kNames) out.push_back(std::string("weno-") + n);
  for (const auto& [b, n] : kNames)
    if (is_z_type(b)) out.push_back(std::string("mop-gmweno-") + n);
  return out;
}

SchemeId parse_scheme(std::string_view name) {
  bool mop = false;
  std::string_view rest;
  if (name.rfind("mop-gmweno-", 0) == 0) {
    mop = true;
    rest = name.substr(11);
  } else if (name.rfind("weno-", 0) == 0) {
    rest = name.substr(5);
  }
  for (const auto& [b, n] : kNames) {
    if (rest == n) {
      if (mop && !is_z_type(b))
        throw UsageError("scheme '" + std::string(name) + "' is not defined: the order-preserving variant needs Z-type weights");
      return {b, mop};
    }
  }
  std::string msg = "unknown scheme '" + std::string(name) + "'; valid:";
  for (const auto& s : valid_scheme_names()) msg += " " + s;
  throw UsageError(msg);
}

}  // namespace weno
