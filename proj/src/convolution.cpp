#include "hbt/convolution.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>

#include "hbt/errors.hpp"

namespace hbt {

double conjugate_exponent(double p) {
  if (!(p >= 1.0)) throw InvalidExponent("exponent must be >= 1");
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

ExponentTriple ExponentTriple::make(double p, double q, double r) {
  for (double e : {p, q, r}) {
    if (!(e >= 1.0 && e <= 2.0)) throw InvalidExponent("exponents p, q, r must lie in [1, 2]");
  }
  ExponentTriple t;
  t.p = p;
  t.q = q;
  t.r = r;
  t.p1 = conjugate_exponent(p);
  t.q1 = conjugate_exponent(q);
  t.r1 = conjugate_exponent(r);
  // 1/p1 + 1/q1 = 1/r  <=>  (1 - 1/p) + (1 - 1/q) = 1/r.
  if (std::fabs((1.0 - 1.0 / p) + (1.0 - 1.0 / q) - 1.0 / r) > 1e-12) {
    throw InvalidExponent("inadmissible exponents: 1/p1 + 1/q1 must equal 1/r");
  }
  return t;
}

void finalize(InequalityReport& report) {
  if (report.rhs > 0.0) {
    report.ratio = report.lhs / report.rhs;
  } else {
    report.ratio = report.lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  report.pass = report.ratio <= 1.0 + report.tolerance;
}

namespace {

void require_positive_alpha(const TransformPlan& plan) {
  if (!(plan.params().alpha > 0.0)) throw InvalidConfig("the convolution structure requires alpha > 0");
}

std::vector<double> product(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

}  // namespace

SampledFunction convolve(const TransformPlan& plan, const SampledFunction& f, const SampledFunction& g) {
  require_positive_alpha(plan);
  const SpectralFunction F = forward_transform(plan, f);
  const SpectralFunction G = forward_transform(plan, g);
  return inverse_transform(plan, {plan.grid(), product(F.values, G.values)});
}

double factorization_residual(const TransformPlan& plan, const SampledFunction& f, const SampledFunction& g) {
  require_positive_alpha(plan);
  const SpectralFunction F = forward_transform(plan, f);
  const SpectralFunction G = forward_transform(plan, g);
  const SpectralFunction FG{plan.grid(), product(F.values, G.values)};
  const SpectralFunction lhs = forward_transform(plan, inverse_transform(plan, FG));
  std::vector<double> diff(lhs.values.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = lhs.values[i] - FG.values[i];
  const double num = lp_norm(diff, *plan.grid(), 2.0);
  return num == 0.0 ? 0.0 : num / (lp_norm(FG, 2.0) + DBL_EPSILON);
}

double young_constant(const ExponentTriple& t) {
  return std::pow(std::numbers::sqrt2, (2.0 / t.p - 1.0) + (2.0 / t.q - 1.0) + (2.0 / t.r - 1.0));
}

double young_tolerance(const ExponentTriple& triple) { return std::isinf(triple.r1) ? 1e-4 : 1e-6; }

InequalityReport young_report(const SampledFunction& f, const SampledFunction& g, const SampledFunction& fg,
                              const ExponentTriple& triple, double tolerance) {
  InequalityReport report;
  report.kind = "young";
  report.triple = triple;
  report.lhs = lp_norm(fg, triple.r1);
  report.constant = young_constant(triple);
  const double norms = lp_norm(f, triple.p) * lp_norm(g, triple.q);
  report.rhs = report.constant * norms;
  const double prior = kPriorYoungConstant * norms;
  report.prior_ratio = prior > 0.0 ? report.lhs / prior : 0.0;
  report.tolerance = tolerance < 0.0 ? young_tolerance(triple) : tolerance;
  finalize(report);
  return report;
}

InequalityReport check_young(const TransformPlan& plan, const SampledFunction& f, const SampledFunction& g,
                             const ExponentTriple& triple, double tolerance) {
  return young_report(f, g, convolve(plan, f, g), triple, tolerance);
}

InequalityReport check_banach_l1(const TransformPlan& plan, const SampledFunction& f, const SampledFunction& g,
                                 double tolerance) {
  InequalityReport report;
  report.kind = "banach_l1";
  // p = q = r = 1 satisfies the older relation 1/p + 1/q - 1 = 1/r, not the
  // admissibility condition of ExponentTriple, so only p is recorded.
  report.p = 1.0;
  report.p1 = 1.0;
  report.lhs = lp_norm(convolve(plan, f, g), 1.0);
  report.constant = kPriorYoungConstant;
  report.rhs = report.constant * lp_norm(f, 1.0) * lp_norm(g, 1.0);
  report.prior_ratio = report.rhs > 0.0 ? report.lhs / report.rhs : 0.0;
  report.tolerance = tolerance;
  finalize(report);
  return report;
}

double check_associativity(const TransformPlan& plan, const SampledFunction& f, const SampledFunction& g,
                           const SampledFunction& h) {
  const SampledFunction left = convolve(plan, convolve(plan, f, g), h);
  const SampledFunction right = convolve(plan, f, convolve(plan, g, h));
  const double num = lp_norm(left - right, 1.0);
  return num == 0.0 ? 0.0 : num / (lp_norm(right, 1.0) + DBL_EPSILON);
}

std::vector<ExponentTriple> standard_triples() {
  return {
      ExponentTriple::make(2.0, 2.0, 1.0),
      ExponentTriple::make(2.0, 1.0, 2.0),
      ExponentTriple::make(1.0, 2.0, 2.0),
      ExponentTriple::make(1.5, 1.5, 1.5),
      ExponentTriple::make(4.0 / 3.0, 4.0 / 3.0, 2.0),
      ExponentTriple::make(1.25, 2.0, 1.0 / 0.7),
      ExponentTriple::make(1.6, 1.6, 1.0 / 0.75),
  };
}

std::vector<ExponentTriple> admissible_triple_sweep(int steps) {
  std::vector<ExponentTriple> out;
  for (int a = 0; a <= steps; ++a) {
    for (int b = 0; b <= steps; ++b) {
      // 1/p, 1/q in [1/2, 1]; 1/r = 2 - 1/p - 1/q must also lie in [1/2, 1].
      const double ip = 0.5 + 0.5 * a / steps;
      const double iq = 0.5 + 0.5 * b / steps;
      const double ir = 2.0 - ip - iq;
      if (ir < 0.5 - 1e-15 || ir > 1.0 + 1e-15) continue;
      out.push_back(ExponentTriple::make(1.0 / ip, 1.0 / iq, 1.0 / std::clamp(ir, 0.5, 1.0)));
    }
  }
  return out;
}

}  // namespace hbt
