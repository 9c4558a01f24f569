#pragma once

#include <span>
#include <vector>

#include "hbt/inequality.hpp"
#include "hbt/quadrature.hpp"
#include "hbt/special_functions.hpp"

namespace hbt {

/// Transform values on the frequency grid. The frequency grid is the
/// spatial grid itself (the transform is its own inverse only on a
/// self-dual grid).
struct SpectralFunction {
  GridHandle freq_grid;
  std::vector<double> values;
};

double lp_norm(const SpectralFunction& F, double p);

/// Dense Hartley-Bessel transform on a self-dual grid:
///
///   (H f)(lambda_j) = sum_i K[j][i] f(x_i) w_i,   K[j][i] = J_{lambda_j}(x_i, alpha).
///
/// K depends on lambda x only, so it is symmetric. Immutable after build;
/// forward/inverse may be called concurrently.
class TransformPlan {
 public:
  /// Fills K row-parallel on `jobs` threads. params.alpha must equal the
  /// grid's alpha. NonConvergence is rethrown with the offending (lambda, x).
  static TransformPlan build(GridHandle grid, const KernelParams& params, unsigned jobs = 1);

  const GridHandle& grid() const noexcept { return grid_; }
  const KernelParams& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return n_; }
  double kernel(std::size_t j, std::size_t i) const noexcept { return kernel_[j * n_ + i]; }
  std::span<const double> kernel_row(std::size_t j) const noexcept { return {kernel_.data() + j * n_, n_}; }

  /// K diag(w) v for nodal values v.
  std::vector<double> apply(std::span<const double> values) const;

 private:
  TransformPlan() = default;

  GridHandle grid_;
  KernelParams params_;
  std::size_t n_ = 0;
  std::vector<double> kernel_;
};

TransformPlan build_plan(GridHandle grid, const KernelParams& params, unsigned jobs = 1);

/// Throws GridMismatch if f is not on the plan's grid.
SpectralFunction forward_transform(const TransformPlan& plan, const SampledFunction& f);

/// The transform is self-inverse: applies the forward map to F.
SampledFunction inverse_transform(const TransformPlan& plan, const SpectralFunction& F);

/// ||H f||_{p1} <= (sqrt 2)^{2/p - 1} ||f||_p for p in [1, 2].
/// Throws InvalidExponent outside [1, 2].
InequalityReport check_hausdorff_young(const TransformPlan& plan, const SampledFunction& f, double p,
                                       double tolerance = 1e-6);

/// (sqrt 2)^{2/p - 1}.
double hausdorff_young_constant(double p);

/// ||H H f - f||_2 / ||f||_2 (0 for the zero function).
double round_trip_error(const TransformPlan& plan, const SampledFunction& f);

/// | ||H f||_2 - ||f||_2 | / ||f||_2 (0 for the zero function).
double plancherel_defect(const TransformPlan& plan, const SampledFunction& f);

}  // namespace hbt
