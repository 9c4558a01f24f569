#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hbt/convolution.hpp"

namespace hbt {

struct SolverOptions {
  /// Smallest admissible |1 + H g(lambda)| over the lambda nodes.
  double denom_threshold = 1e-6;
  /// Largest admissible residual ||f + f*g - rhs||_1.
  double residual_tol = 1e-6;
};

enum class SolveStatus { Solved, DenominatorTooSmall, ResidualTooLarge };

std::string_view to_string(SolveStatus status);

/// Outcome of solving f + f *_alpha g = rhs, where rhs = g *_alpha h for the
/// equation in its standard form.
struct SolverReport {
  SolveStatus status = SolveStatus::DenominatorTooSmall;
  bool solvable = false;
  /// Absent when the denominator check refused the solve.
  std::optional<SampledFunction> solution_f;
  /// The function l with H l = H g / (1 + H g).
  std::optional<SampledFunction> multiplier_l;
  /// The h of the right-hand side g * h; absent for solve_with_rhs.
  std::optional<SampledFunction> data_h;
  double min_denominator = 0.0;
  double argmin_lambda = 0.0;
  double residual_l1 = 0.0;
  /// ||f||_1 and 4 ||l||_1 ||h||_1; NaN without h or without a solution.
  double bound_lhs = std::numeric_limits<double>::quiet_NaN();
  double bound_rhs = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::string> warnings;
};

/// Solves f + f * g = g * h by spectral division:
///   H l = G / (1 + G),  G = H g;   f = l * h.
/// Refuses (status DenominatorTooSmall, no solution) when
/// min |1 + G| < denom_threshold. Requires alpha > 0.
SolverReport solve_integral_equation(const TransformPlan& plan, const SampledFunction& g, const SampledFunction& h,
                                     const SolverOptions& options = {});

/// Solves f + f * g = rhs for an arbitrary right-hand side:
///   H f = H rhs / (1 + G).
/// Used for manufactured solutions, where rhs = f0 + f0 * g.
SolverReport solve_with_rhs(const TransformPlan& plan, const SampledFunction& g, const SampledFunction& rhs,
                            const SolverOptions& options = {});

/// ||f + f * g - g * h||_1.
double residual(const TransformPlan& plan, const SampledFunction& f, const SampledFunction& g,
                const SampledFunction& h);

/// ||f + f * g - rhs||_1.
double residual_rhs(const TransformPlan& plan, const SampledFunction& f, const SampledFunction& g,
                    const SampledFunction& rhs);

struct BoundCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool holds = false;
};

struct AprioriCheck {
  /// "l1" first, then "l2_l1" (A), "sup_l2_l2" (B) and one "triple(p,q,r)"
  /// per requested triple (C).
  std::vector<BoundCheck> bounds;

  bool holds() const;
};

/// Evaluates ||f||_1 <= 4 ||l||_1 ||h||_1 and its refinements
///   (A) ||f||_2   <= sqrt2 ||l||_2 ||h||_1
///   (B) ||f||_inf <= sqrt2 ||l||_2 ||h||_2
///   (C) ||f||_{r1} <= C_{p,q,r} ||l||_p ||h||_q  for each triple.
/// `extra_triples` are (p, q, r) values validated through ExponentTriple::make,
/// so an inadmissible request surfaces InvalidExponent. Throws
/// ReportNotSolvable unless the report holds a solution and its h.
AprioriCheck check_apriori_bound(const SolverReport& report,
                                 const std::vector<std::array<double, 3>>& extra_triples = {},
                                 double tolerance = 1e-6);

}  // namespace hbt
