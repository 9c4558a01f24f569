#include "hbt/special_functions.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <sstream>

#include "double_double.hpp"
#include "hbt/errors.hpp"

namespace hbt {
namespace {

using detail::DoubleDouble;
using detail::SinCos;

// Below this |x| the power series is used; above, the Hankel expansion
// (raised to order^2/2 for large orders, where the expansion needs room).
constexpr double kAsymptoticFloor = 25.0;
// Beyond this |x| the double-double power series cancels too many digits.
constexpr double kSeriesCeiling = 45.0;

void validate_truncation(const KernelParams& params) {
  if (!(params.series_tol > 0.0 && params.series_tol <= 1e-10)) {
    throw InvalidConfig("series_tol must lie in (0, 1e-10]");
  }
  if (params.max_terms < 30) throw InvalidConfig("max_terms must be at least 30");
}

double switch_point(double order) { return std::max(kAsymptoticFloor, 0.5 * order * order); }

[[noreturn]] void throw_nonconvergence(const char* what, double order, double x) {
  std::ostringstream msg;
  msg.precision(17);
  msg << what << " (order=" << order << ", x=" << x << ")";
  throw NonConvergence(msg.str(), order, x);
}

// sum_n (-1)^n (x/2)^{2n} / (n! (nu+1)_n) with the term recursion
//   term_{n+1} = term_n * (-(x/2)^2) / ((n+1)(nu+1+n)).
DoubleDouble bessel_series(double nu, double ax, const KernelParams& params) {
  if (ax > kSeriesCeiling) {
    throw_nonconvergence("argument outside the reliable domain of the power series", nu, ax);
  }
  const double half = 0.5 * ax;
  const DoubleDouble y = -detail::two_prod(half, half);
  DoubleDouble term = 1.0;
  DoubleDouble sum = 1.0;
  int quiet = 0;
  for (int n = 0; n < params.max_terms; ++n) {
    const DoubleDouble denom = (DoubleDouble(nu) + static_cast<double>(n + 1)) * static_cast<double>(n + 1);
    term = term * y / denom;
    sum += term;
    if (detail::abs_hi(term) < params.series_tol * (detail::abs_hi(sum) + DBL_MIN)) {
      if (++quiet == 2) return sum;
    } else {
      quiet = 0;
    }
  }
  throw_nonconvergence("power series did not converge within max_terms", nu, ax);
}

struct HankelPQ {
  DoubleDouble p;
  DoubleDouble q;
};

// Hankel's P and Q for J_nu(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi),
// chi = x - (nu/2 + 1/4) pi.
HankelPQ hankel_pq(double nu, double ax, const KernelParams& params) {
  const DoubleDouble mu = detail::two_prod(2.0 * nu, 2.0 * nu);
  const double eight_x = 8.0 * ax;
  DoubleDouble term = 1.0;
  HankelPQ out{1.0, 0.0};
  double previous = 1.0;
  int quiet = 0;
  for (int k = 1; k <= params.max_terms; ++k) {
    const double odd = static_cast<double>(2 * k - 1);
    term = term * (mu - odd * odd) / detail::two_prod(eight_x, static_cast<double>(k));
    switch (k % 4) {
      case 1: out.q += term; break;
      case 2: out.p -= term; break;
      case 3: out.q -= term; break;
      default: out.p += term; break;
    }
    const double magnitude = detail::abs_hi(term);
    if (magnitude < params.series_tol * (detail::abs_hi(out.p) + detail::abs_hi(out.q))) {
      if (++quiet == 2) return out;
    } else {
      quiet = 0;
    }
    if (magnitude > previous) {
      throw_nonconvergence("large-argument expansion diverged before reaching tolerance", nu, ax);
    }
    previous = magnitude;
  }
  throw_nonconvergence("large-argument expansion did not converge within max_terms", nu, ax);
}

// sin/cos of chi = x - s pi.
SinCos phase(double ax, double s) {
  const SinCos a = detail::sincos_dd(ax);
  const SinCos b = detail::sincos_pi_dd(s);
  return {a.sin * b.cos - a.cos * b.sin, a.cos * b.cos + a.sin * b.sin};
}

// Gamma(nu+1) 2^{nu+1/2} / sqrt(pi): B_nu(x) = prefactor * x^{-(nu+1/2)} * (P cos - Q sin).
double hankel_prefactor(double nu) {
  return std::tgamma(nu + 1.0) * std::exp2(nu + 0.5) * std::numbers::inv_sqrtpi;
}

}  // namespace

void KernelParams::validate() const {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw InvalidConfig("alpha must be finite and >= 0");
  validate_truncation(*this);
}

double pochhammer(double a, std::uint32_t n) {
  double product = 1.0;
  for (std::uint32_t k = 0; k < n; ++k) product *= a + static_cast<double>(k);
  return product;
}

double normalized_bessel(double order, double x, const KernelParams& params) {
  if (!(order > -1.0) || !std::isfinite(order)) throw InvalidConfig("normalized Bessel order must exceed -1");
  validate_truncation(params);
  const double ax = std::fabs(x);
  if (ax < switch_point(order)) return bessel_series(order, ax, params).to_double();

  const HankelPQ pq = hankel_pq(order, ax, params);
  const SinCos sc = phase(ax, 0.5 * order + 0.25);
  const DoubleDouble oscillation = pq.p * sc.cos - pq.q * sc.sin;
  return hankel_prefactor(order) * std::pow(ax, -(order + 0.5)) * oscillation.to_double();
}

double cas(double x) { return std::cos(x) + std::sin(x); }

double hartley_bessel_kernel(double lambda, double x, const KernelParams& params) {
  return KernelEvaluator(params)(lambda * x);
}

KernelEvaluator::KernelEvaluator(const KernelParams& params)
    : params_(params),
      nu_lo_(params.alpha - 0.5),
      nu_hi_(params.alpha + 0.5),
      switch_at_(switch_point(params.alpha + 0.5)),
      prefac_lo_(0.0),
      prefac_hi_(0.0) {
  params_.validate();
  prefac_lo_ = hankel_prefactor(nu_lo_);
  prefac_hi_ = hankel_prefactor(nu_hi_) / (2.0 * params_.alpha + 1.0);
}

double KernelEvaluator::operator()(double t) const {
  return std::fabs(t) < switch_at_ ? series_pair(t) : asymptotic_pair(t);
}

double KernelEvaluator::series_pair(double t) const {
  const double at = std::fabs(t);
  const DoubleDouble even = bessel_series(nu_lo_, at, params_);
  const DoubleDouble odd = bessel_series(nu_hi_, at, params_);
  return (even + odd * (t / (2.0 * params_.alpha + 1.0))).to_double();
}

// With chi = |t| - alpha pi / 2 the two orders share one phase:
// chi(alpha + 1/2) = chi - pi/2.
double KernelEvaluator::asymptotic_pair(double t) const {
  const double at = std::fabs(t);
  const HankelPQ lo = hankel_pq(nu_lo_, at, params_);
  const HankelPQ hi = hankel_pq(nu_hi_, at, params_);
  const SinCos sc = phase(at, 0.5 * params_.alpha);
  const DoubleDouble even = (lo.p * sc.cos - lo.q * sc.sin) * prefac_lo_;
  const DoubleDouble odd = (hi.p * sc.sin + hi.q * sc.cos) * prefac_hi_;
  const DoubleDouble sum = t < 0.0 ? even - odd : even + odd;
  return std::pow(at, -params_.alpha) * sum.to_double();
}

}  // namespace hbt
