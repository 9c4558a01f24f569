#pragma once

// Minimal double-double arithmetic (unevaluated sum hi + lo, |lo| <= ulp(hi)/2).
// Only the operations needed by the Bessel evaluators are provided.

#include <cmath>

namespace hbt::detail {

struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double h) : hi(h), lo(0.0) {}  // NOLINT(google-explicit-constructor)
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

inline DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
  DoubleDouble s = two_sum(a.hi, b.hi);
  const DoubleDouble t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator-(const DoubleDouble& a) { return {-a.hi, -a.lo}; }

inline DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) { return a + (-b); }

inline DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
  DoubleDouble p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator*(const DoubleDouble& a, double b) {
  DoubleDouble p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) {
  const double q1 = a.hi / b.hi;
  DoubleDouble r = a - b * q1;
  const double q2 = r.hi / b.hi;
  r = r - b * q2;
  const double q3 = r.hi / b.hi;
  return DoubleDouble(quick_two_sum(q1, q2)) + q3;
}

inline DoubleDouble operator/(const DoubleDouble& a, double b) {
  const double q1 = a.hi / b;
  DoubleDouble r = a - two_prod(q1, b);
  const double q2 = r.hi / b;
  r = r - two_prod(q2, b);
  const double q3 = r.hi / b;
  return DoubleDouble(quick_two_sum(q1, q2)) + q3;
}

inline DoubleDouble& operator+=(DoubleDouble& a, const DoubleDouble& b) { return a = a + b; }
inline DoubleDouble& operator-=(DoubleDouble& a, const DoubleDouble& b) { return a = a - b; }

inline double abs_hi(const DoubleDouble& a) { return std::fabs(a.hi); }

// pi and pi/2 to ~106 bits.
inline constexpr DoubleDouble kPi{3.141592653589793116e+00, 1.224646799147353207e-16};
inline constexpr DoubleDouble kHalfPi{1.570796326794896558e+00, 6.123233995736766036e-17};

struct SinCos {
  DoubleDouble sin;
  DoubleDouble cos;
};

// Taylor expansion, valid for |theta| <= pi/4.
inline SinCos sincos_reduced(const DoubleDouble& theta) {
  const DoubleDouble t2 = theta * theta;
  DoubleDouble s = theta;
  DoubleDouble c = 1.0;
  DoubleDouble sterm = theta;
  DoubleDouble cterm = 1.0;
  for (int n = 1; n < 30; ++n) {
    cterm = cterm * t2 / (-static_cast<double>((2 * n - 1) * (2 * n)));
    sterm = sterm * t2 / (-static_cast<double>((2 * n) * (2 * n + 1)));
    c += cterm;
    s += sterm;
    if (abs_hi(cterm) < 1e-34 && abs_hi(sterm) < 1e-34) break;
  }
  return {s, c};
}

// Rotate (sin, cos) of an angle by quadrant * pi/2.
inline SinCos rotate_quadrant(const SinCos& sc, long long quadrant) {
  switch (((quadrant % 4) + 4) % 4) {
    case 0: return sc;
    case 1: return {sc.cos, -sc.sin};
    case 2: return {-sc.sin, -sc.cos};
    default: return {-sc.cos, sc.sin};
  }
}

// sin/cos of an exact double argument with double-double accurate reduction.
inline SinCos sincos_dd(double x) {
  const double k = std::nearbyint(x / kHalfPi.hi);
  DoubleDouble r = DoubleDouble(x) - two_prod(k, kHalfPi.hi);
  r = r - DoubleDouble(k) * kHalfPi.lo;
  return rotate_quadrant(sincos_reduced(r), static_cast<long long>(k));
}

// sin/cos of pi * s for an exact double s.
inline SinCos sincos_pi_dd(double s) {
  const double q = std::nearbyint(2.0 * s);
  const double f = s - 0.5 * q;  // exact, |f| <= 1/4
  return rotate_quadrant(sincos_reduced(kPi * f), static_cast<long long>(std::fmod(q, 4.0)));
}

}  // namespace hbt::detail
