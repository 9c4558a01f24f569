#pragma once

#include <cstdint>

namespace hbt {

/// Order parameter and truncation controls for the Hartley-Bessel kernel.
struct KernelParams {
  double alpha = 1.0;
  /// Relative truncation tolerance for both the power series and the
  /// large-argument expansion.
  double series_tol = 1e-22;
  int max_terms = 300;

  /// Throws InvalidConfig unless alpha >= 0, 0 < series_tol <= 1e-10 and
  /// max_terms >= 30.
  void validate() const;
};

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
double pochhammer(double a, std::uint32_t n);

/// Normalized Bessel function
///
///   B_order(x) = sum_{n>=0} (-1)^n / (n! (order+1)_n) (x/2)^{2n},   order > -1,
///
/// equal to Gamma(order+1) (2/x)^order J_order(x). Even in x.
///
/// Evaluated in double-double arithmetic: the power series for
/// |x| < max(25, order^2/2), the Hankel large-argument expansion beyond.
/// The power series alone is only trusted up to |x| = 45; an argument that
/// falls between the two regimes raises NonConvergence, as does exhausting
/// params.max_terms. params.alpha is ignored here.
double normalized_bessel(double order, double x, const KernelParams& params = {});

/// cas(x) = cos(x) + sin(x).
double cas(double x);

/// Hartley-Bessel kernel
///   J_lambda(x, alpha) = B_{alpha-1/2}(lambda x) + lambda x / (2 alpha + 1) B_{alpha+1/2}(lambda x).
double hartley_bessel_kernel(double lambda, double x, const KernelParams& params);

/// Kernel evaluator with the order-dependent constants hoisted out, for
/// filling transform matrices. Immutable; safe to share between threads.
class KernelEvaluator {
 public:
  explicit KernelEvaluator(const KernelParams& params);

  /// Kernel as a function of the product t = lambda * x.
  double operator()(double t) const;

  const KernelParams& params() const noexcept { return params_; }

 private:
  double series_pair(double t) const;
  double asymptotic_pair(double t) const;

  KernelParams params_;
  double nu_lo_;        // alpha - 1/2
  double nu_hi_;        // alpha + 1/2
  double switch_at_;    // |t| threshold for the large-argument expansion
  double prefac_lo_;    // Gamma(nu+1) 2^{nu+1/2} / sqrt(pi), nu = nu_lo_
  double prefac_hi_;
};

}  // namespace hbt
