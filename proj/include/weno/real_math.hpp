#pragma once
// Thin overload set so kernels can be instantiated for double and, where
// available, __float128.
#include <cmath>

#if defined(WENO_HAVE_FLOAT128)
#include <quadmath.h>
#endif

/// Hot kernel helpers must inline into the flux loops.
#define WENO_HOT [[gnu::always_inline]] inline

namespace weno::rm {

inline double abs(double x) { return std::fabs(x); }
inline double sqrt(double x) { return std::sqrt(x); }
inline double pow(double x, double y) { return std::pow(x, y); }
inline double sin(double x) { return std::sin(x); }
inline double cos(double x) { return std::cos(x); }
inline double log(double x) { return std::log(x); }
inline bool isfinite(double x) { return std::isfinite(x); }

inline long double abs(long double x) { return std::fabs(x); }
inline long double sqrt(long double x) { return std::sqrt(x); }
inline long double pow(long double x, long double y) { return std::pow(x, y); }
inline long double sin(long double x) { return std::sin(x); }
inline long double cos(long double x) { return std::cos(x); }
inline long double log(long double x) { return std::log(x); }
inline bool isfinite(long double x) { return std::isfinite(x); }

#if defined(WENO_HAVE_FLOAT128)
inline __float128 abs(__float128 x) { return fabsq(x); }
inline __float128 sqrt(__float128 x) { return sqrtq(x); }
inline __float128 pow(__float128 x, __float128 y) { return powq(x, y); }
inline __float128 sin(__float128 x) { return sinq(x); }
inline __float128 cos(__float128 x) { return cosq(x); }
inline __float128 log(__float128 x) { return logq(x); }
inline bool isfinite(__float128 x) { return finiteq(x) != 0; }
#endif

/// x^p for integer-valued p; the common p = 1, 2 avoid pow().
template <class Real>
WENO_HOT Real ipow(Real x, int p) {
  if (p == 2) return x * x;
  if (p == 1) return x;
  if (p == 0) return Real(1);
  return rm::pow(x, Real(p));
}

/// |x|^J with the J = 1.5 case done as a*sqrt(a).
template <class Real>
WENO_HOT Real abs_pow(Real x, Real J) {
  const Real a = rm::abs(x);
  if (J == Real(1.5)) return a * rm::sqrt(a);
  if (J == Real(1)) return a;
  if (J == Real(2)) return a * a;
  return rm::pow(a, J);
}

}  // namespace weno::rm
