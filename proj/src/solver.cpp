#include "hbt/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hbt/errors.hpp"

namespace hbt {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Solved:
      return "solved";
    case SolveStatus::DenominatorTooSmall:
      return "denominator_too_small";
    case SolveStatus::ResidualTooLarge:
      return "residual_too_large";
  }
  return "unknown";
}

namespace {

void require_positive_alpha(const TransformPlan& plan) {
  if (!(plan.params().alpha > 0.0)) throw InvalidConfig("the integral equation requires alpha > 0");
}

void warn_on_boundary(std::vector<std::string>& warnings, const char* name, const SampledFunction& f) {
  const double ratio = boundary_ratio(f);
  if (ratio > kBoundaryDecayThreshold) {
    std::ostringstream msg;
    msg.precision(3);
    msg << name << " has not decayed at the truncation boundary (|" << name << "(+-R)| / max = " << ratio << ")";
    warnings.push_back(msg.str());
  }
}

// Shared core: H f = H rhs / (1 + G). Fills diagnostics and, when the
// denominator check passes, f and l.
SolverReport divide(const TransformPlan& plan, const SampledFunction& g, const SampledFunction& rhs,
                    const SolverOptions& options) {
  if (!(options.denom_threshold > 0.0)) throw InvalidConfig("denominator threshold must be positive");
  if (!(options.residual_tol > 0.0)) throw InvalidConfig("residual tolerance must be positive");
  require_positive_alpha(plan);

  const SpectralFunction G = forward_transform(plan, g);
  const SpectralFunction R = forward_transform(plan, rhs);
  const auto lambdas = plan.grid()->nodes();

  SolverReport report;
  report.min_denominator = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < G.values.size(); ++j) {
    const double d = std::fabs(1.0 + G.values[j]);
    if (d < report.min_denominator) {
      report.min_denominator = d;
      report.argmin_lambda = lambdas[j];
    }
  }
  warn_on_boundary(report.warnings, "g", g);
  if (report.min_denominator < options.denom_threshold) {
    report.status = SolveStatus::DenominatorTooSmall;
    report.solvable = false;
    report.residual_l1 = std::numeric_limits<double>::quiet_NaN();
    return report;
  }
  if (report.min_denominator < 10.0 * options.denom_threshold) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "min |1 + H g| = " << report.min_denominator << " at lambda = " << report.argmin_lambda
        << " is within a factor 10 of the threshold; 1 + H g may vanish between nodes";
    report.warnings.push_back(msg.str());
  }

  std::vector<double> L(G.values.size());
  std::vector<double> F(G.values.size());
  for (std::size_t j = 0; j < L.size(); ++j) {
    const double denom = 1.0 + G.values[j];
    L[j] = G.values[j] / denom;
    F[j] = R.values[j] / denom;
  }
  report.multiplier_l = inverse_transform(plan, {plan.grid(), std::move(L)});
  report.solution_f = inverse_transform(plan, {plan.grid(), std::move(F)});
  return report;
}

void settle(SolverReport& report, const SolverOptions& options) {
  if (report.residual_l1 <= options.residual_tol) {
    report.status = SolveStatus::Solved;
    report.solvable = true;
  } else {
    report.status = SolveStatus::ResidualTooLarge;
    report.solvable = false;
  }
  warn_on_boundary(report.warnings, "f", *report.solution_f);
}

}  // namespace

SolverReport solve_integral_equation(const TransformPlan& plan, const SampledFunction& g, const SampledFunction& h,
                                     const SolverOptions& options) {
  require_same_grid(*plan.grid(), *g.grid);
  require_same_grid(*plan.grid(), *h.grid);
  require_positive_alpha(plan);
  const SampledFunction rhs = convolve(plan, g, h);
  SolverReport report = divide(plan, g, rhs, options);
  report.data_h = h;
  warn_on_boundary(report.warnings, "h", h);
  if (!report.solution_f) return report;

  // f = l * h; identical to the division above up to rounding, but follows
  // the solution formula literally.
  report.solution_f = convolve(plan, *report.multiplier_l, h);
  report.residual_l1 = residual_rhs(plan, *report.solution_f, g, rhs);
  report.bound_lhs = lp_norm(*report.solution_f, 1.0);
  report.bound_rhs = kPriorYoungConstant * lp_norm(*report.multiplier_l, 1.0) * lp_norm(h, 1.0);
  settle(report, options);
  return report;
}

SolverReport solve_with_rhs(const TransformPlan& plan, const SampledFunction& g, const SampledFunction& rhs,
                            const SolverOptions& options) {
  require_same_grid(*plan.grid(), *g.grid);
  require_same_grid(*plan.grid(), *rhs.grid);
  SolverReport report = divide(plan, g, rhs, options);
  if (!report.solution_f) return report;
  report.residual_l1 = residual_rhs(plan, *report.solution_f, g, rhs);
  report.bound_lhs = lp_norm(*report.solution_f, 1.0);
  settle(report, options);
  return report;
}

double residual_rhs(const TransformPlan& plan, const SampledFunction& f, const SampledFunction& g,
                    const SampledFunction& rhs) {
  require_same_grid(*plan.grid(), *rhs.grid);
  return lp_norm(f + convolve(plan, f, g) - rhs, 1.0);
}

double residual(const TransformPlan& plan, const SampledFunction& f, const SampledFunction& g,
                const SampledFunction& h) {
  return residual_rhs(plan, f, g, convolve(plan, g, h));
}

bool AprioriCheck::holds() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const BoundCheck& b) { return b.holds; });
}

AprioriCheck check_apriori_bound(const SolverReport& report, const std::vector<std::array<double, 3>>& extra_triples,
                                 double tolerance) {
  if (!report.solvable || !report.solution_f || !report.multiplier_l) {
    throw ReportNotSolvable("a-priori bounds need a solvable report");
  }
  if (!report.data_h) throw ReportNotSolvable("a-priori bounds need the data h of the right-hand side g * h");

  const SampledFunction& f = *report.solution_f;
  const SampledFunction& l = *report.multiplier_l;
  const SampledFunction& h = *report.data_h;

  // Validate every requested triple before any work.
  std::vector<ExponentTriple> triples;
  triples.reserve(extra_triples.size());
  for (const auto& [p, q, r] : extra_triples) triples.push_back(ExponentTriple::make(p, q, r));

  AprioriCheck check;
  const auto add = [&](std::string name, double lhs, double rhs) {
    BoundCheck b;
    b.name = std::move(name);
    b.lhs = lhs;
    b.rhs = rhs;
    if (rhs > 0.0) {
      b.ratio = lhs / rhs;
    } else {
      b.ratio = lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    b.holds = b.ratio <= 1.0 + tolerance;
    check.bounds.push_back(std::move(b));
  };

  add("l1", lp_norm(f, 1.0), kPriorYoungConstant * lp_norm(l, 1.0) * lp_norm(h, 1.0));
  const double l2 = lp_norm(l, 2.0);
  add("l2_l1", lp_norm(f, 2.0), std::numbers::sqrt2 * l2 * lp_norm(h, 1.0));
  add("sup_l2_l2", lp_norm(f, std::numeric_limits<double>::infinity()), std::numbers::sqrt2 * l2 * lp_norm(h, 2.0));
  for (const ExponentTriple& t : triples) {
    std::ostringstream name;
    name << "triple(" << t.p << "," << t.q << "," << t.r << ")";
    add(name.str(), lp_norm(f, t.r1), young_constant(t) * lp_norm(l, t.p) * lp_norm(h, t.q));
  }
  return check;
}

}  // namespace hbt
