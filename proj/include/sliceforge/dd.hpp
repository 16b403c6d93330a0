#pragma once

#include <cmath>

// Double-double arithmetic (~31 significant digits). Used where a sum of
// huge, nearly cancelling terms must come out accurate in absolute terms,
// e.g. binomial wave superpositions whose terms reach 1e23 while the sum
// stays O(1). Only the operations needed for that are provided.
namespace sliceforge::dd {

struct Dd {
  double hi = 0.0;
  double lo = 0.0;
};

inline Dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Dd quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline Dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Dd add(const Dd& a, const Dd& b) {
  Dd s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline Dd sub(const Dd& a, const Dd& b) { return add(a, {-b.hi, -b.lo}); }

inline Dd mul(const Dd& a, const Dd& b) {
  Dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline Dd mul(const Dd& a, double b) {
  Dd p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline Dd div(const Dd& a, const Dd& b) {
  const double q1 = a.hi / b.hi;
  Dd r = sub(a, mul(b, q1));
  const double q2 = r.hi / b.hi;
  r = sub(r, mul(b, q2));
  const double q3 = r.hi / b.hi;
  return add(quick_two_sum(q1, q2), {q3, 0.0});
}

inline Dd from(double x) { return {x, 0.0}; }

// pi/2 and ln 2 split into two doubles
inline constexpr double kPi2Hi = 1.5707963267948966;
inline constexpr double kPi2Lo = 6.123233995736766e-17;
inline constexpr double kLn2Hi = 0.6931471805599453;
inline constexpr double kLn2Lo = 2.3190468138462996e-17;

// sin/cos on [-pi/4, pi/4] by Taylor series in dd arithmetic. Each factorial
// ratio is divided in dd: a pre-rounded double reciprocal (1/6, 1/20, ...)
// would cap the kernel near 1e-18 absolute instead of ~1e-32.
inline Dd sin_kernel(const Dd& r) {
  const Dd r2 = mul(r, r);
  Dd term = r;
  Dd sum = r;
  for (int k = 1; k <= 16; ++k) {
    term = mul(term, r2);
    term = div(term, from(-(2.0 * k) * (2.0 * k + 1.0)));
    sum = add(sum, term);
    if (std::fabs(term.hi) < 1e-36) break;
  }
  return sum;
}

inline Dd cos_kernel(const Dd& r) {
  const Dd r2 = mul(r, r);
  Dd term = from(1.0);
  Dd sum = term;
  for (int k = 1; k <= 16; ++k) {
    term = mul(term, r2);
    term = div(term, from(-(2.0 * k - 1.0) * (2.0 * k)));
    sum = add(sum, term);
    if (std::fabs(term.hi) < 1e-36) break;
  }
  return sum;
}

// sin and cos of a dd angle, reduced modulo pi/2
inline void sincos(const Dd& theta, Dd& s, Dd& c) {
  const double m = std::nearbyint(theta.hi / kPi2Hi);
  Dd r = sub(theta, mul({kPi2Hi, kPi2Lo}, m));
  const long q = static_cast<long>(m) & 3;
  const Dd sr = sin_kernel(r);
  const Dd cr = cos_kernel(r);
  switch (q < 0 ? q + 4 : q) {
    case 0: s = sr; c = cr; break;
    case 1: s = cr; c = {-sr.hi, -sr.lo}; break;
    case 2: s = {-sr.hi, -sr.lo}; c = {-cr.hi, -cr.lo}; break;
    default: s = {-cr.hi, -cr.lo}; c = sr; break;
  }
}

// exp of a dd argument, reduced modulo ln 2
inline Dd exp(const Dd& x) {
  const double m = std::nearbyint(x.hi / kLn2Hi);
  Dd r = sub(x, mul({kLn2Hi, kLn2Lo}, m));
  Dd term = from(1.0);
  Dd sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = mul(term, r);
    term = div(term, from(static_cast<double>(k)));
    sum = add(sum, term);
    if (std::fabs(term.hi) < 1e-36) break;
  }
  return mul(sum, std::ldexp(1.0, static_cast<int>(m)));
}

struct Complex {
  Dd re, im;
};

inline Complex add(const Complex& a, const Complex& b) {
  return {add(a.re, b.re), add(a.im, b.im)};
}

inline Complex sub(const Complex& a, const Complex& b) {
  return {sub(a.re, b.re), sub(a.im, b.im)};
}

inline Complex mul(const Complex& a, const Complex& b) {
  return {sub(mul(a.re, b.re), mul(a.im, b.im)),
          add(mul(a.re, b.im), mul(a.im, b.re))};
}

inline Complex mul(const Complex& a, const Dd& s) {
  return {mul(a.re, s), mul(a.im, s)};
}

// e^{i theta} for dd theta
inline Complex cis(const Dd& theta) {
  Complex z;
  sincos(theta, z.im, z.re);
  return z;
}

}  // namespace sliceforge::dd
