#pragma once

#include <vector>

#include "hbt/inequality.hpp"
#include "hbt/transform.hpp"

namespace hbt {

/// f *_alpha g = H(H f . H g), the convolution realized through its
/// spectral factorization. Requires alpha > 0 (InvalidConfig otherwise).
SampledFunction convolve(const TransformPlan& plan, const SampledFunction& f, const SampledFunction& g);

/// ||H(f * g) - H f . H g||_2 / (||H f . H g||_2 + eps). Exact in exact
/// arithmetic; measures the discrete self-inversion error.
double factorization_residual(const TransformPlan& plan, const SampledFunction& f, const SampledFunction& g);

/// C_{p,q,r} = (sqrt 2)^{(2/p - 1) + (2/q - 1) + (2/r - 1)}.
double young_constant(const ExponentTriple& triple);

/// Constant of the earlier Young-type bound the new one is compared against.
inline constexpr double kPriorYoungConstant = 4.0;

/// Default tolerance of a Young trial: sup norms (r1 = infinity) converge
/// more slowly under refinement.
double young_tolerance(const ExponentTriple& triple);

/// ||f * g||_{r1} <= C_{p,q,r} ||f||_p ||g||_q. A negative tolerance picks
/// young_tolerance(triple).
InequalityReport check_young(const TransformPlan& plan, const SampledFunction& f, const SampledFunction& g,
                             const ExponentTriple& triple, double tolerance = -1.0);

/// Same as check_young for a precomputed f * g; lets a sweep evaluate many
/// triples against one convolution.
InequalityReport young_report(const SampledFunction& f, const SampledFunction& g, const SampledFunction& fg,
                              const ExponentTriple& triple, double tolerance = -1.0);

/// ||f * g||_1 <= 4 ||f||_1 ||g||_1.
InequalityReport check_banach_l1(const TransformPlan& plan, const SampledFunction& f, const SampledFunction& g,
                                 double tolerance = 1e-6);

/// ||(f*g)*h - f*(g*h)||_1 / (||f*(g*h)||_1 + eps).
double check_associativity(const TransformPlan& plan, const SampledFunction& f, const SampledFunction& g,
                           const SampledFunction& h);

/// The exponent triples every Young sweep covers: the three endpoint cases
/// (2,2,1), (2,1,2), (1,2,2), the symmetric (3/2,3/2,3/2) and a few interior
/// points.
std::vector<ExponentTriple> standard_triples();

/// Admissible triples on a regular grid of (1/p, 1/q) with spacing 1/steps.
std::vector<ExponentTriple> admissible_triple_sweep(int steps);

}  // namespace hbt
