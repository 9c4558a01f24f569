#include "hbt/transform.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hbt/errors.hpp"
#include "hbt/parallel.hpp"

namespace hbt {

double lp_norm(const SpectralFunction& F, double p) { return lp_norm(F.values, *F.freq_grid, p); }

TransformPlan TransformPlan::build(GridHandle grid, const KernelParams& params, unsigned jobs) {
  params.validate();
  if (grid->alpha() != params.alpha) throw InvalidConfig("kernel alpha differs from the grid's alpha");

  TransformPlan plan;
  plan.grid_ = std::move(grid);
  plan.params_ = params;
  plan.n_ = plan.grid_->size();
  const std::size_t n = plan.n_;
  plan.kernel_.assign(n * n, 0.0);

  const KernelEvaluator kernel(params);
  const auto nodes = plan.grid_->nodes();
  double* K = plan.kernel_.data();
  // Upper triangle only; lambda_j x_i == lambda_i x_j bit for bit.
  parallel_for(n, jobs, [&](std::size_t j) {
    for (std::size_t i = j; i < n; ++i) {
      try {
        K[j * n + i] = kernel(nodes[j] * nodes[i]);
      } catch (const NonConvergence& e) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "kernel evaluation failed at lambda=" << nodes[j] << ", x=" << nodes[i] << ": " << e.what();
        throw NonConvergence(msg.str(), e.order(), e.argument());
      }
    }
  });
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) K[j * n + i] = K[i * n + j];
  }
  return plan;
}

std::vector<double> TransformPlan::apply(std::span<const double> values) const {
  const auto w = grid_->mu_weights();
  std::vector<double> weighted(n_);
  for (std::size_t i = 0; i < n_; ++i) weighted[i] = values[i] * w[i];
  std::vector<double> out(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    const double* row = kernel_.data() + j * n_;
    double sum = 0.0;
    for (std::size_t i = 0; i < n_; ++i) sum += row[i] * weighted[i];
    out[j] = sum;
  }
  return out;
}

TransformPlan build_plan(GridHandle grid, const KernelParams& params, unsigned jobs) {
  return TransformPlan::build(std::move(grid), params, jobs);
}

SpectralFunction forward_transform(const TransformPlan& plan, const SampledFunction& f) {
  require_same_grid(*plan.grid(), *f.grid);
  return {plan.grid(), plan.apply(f.values)};
}

SampledFunction inverse_transform(const TransformPlan& plan, const SpectralFunction& F) {
  require_same_grid(*plan.grid(), *F.freq_grid);
  return {plan.grid(), plan.apply(F.values)};
}

double hausdorff_young_constant(double p) { return std::pow(std::numbers::sqrt2, 2.0 / p - 1.0); }

InequalityReport check_hausdorff_young(const TransformPlan& plan, const SampledFunction& f, double p,
                                       double tolerance) {
  if (!(p >= 1.0 && p <= 2.0)) throw InvalidExponent("Hausdorff-Young exponent must lie in [1, 2]");
  const SpectralFunction F = forward_transform(plan, f);
  InequalityReport report;
  report.kind = "hausdorff_young";
  report.p = p;
  report.p1 = conjugate_exponent(p);
  report.lhs = lp_norm(F, report.p1);
  report.constant = hausdorff_young_constant(p);
  report.rhs = report.constant * lp_norm(f, p);
  report.tolerance = tolerance;
  finalize(report);
  return report;
}

double round_trip_error(const TransformPlan& plan, const SampledFunction& f) {
  const SampledFunction back = inverse_transform(plan, forward_transform(plan, f));
  const double norm = lp_norm(f, 2.0);
  return norm == 0.0 ? 0.0 : lp_norm(back - f, 2.0) / norm;
}

double plancherel_defect(const TransformPlan& plan, const SampledFunction& f) {
  const double norm = lp_norm(f, 2.0);
  return norm == 0.0 ? 0.0 : std::fabs(lp_norm(forward_transform(plan, f), 2.0) - norm) / norm;
}

}  // namespace hbt
