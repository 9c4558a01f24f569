#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hbt/convolution.hpp"
#include "hbt/function_spec.hpp"

namespace hbt {

enum class Suite { HausdorffYoung, Young, BanachL1 };

std::string_view to_string(Suite suite);
/// Accepts "hausdorff_young", "young", "banach_l1"; throws InvalidConfig.
Suite parse_suite(std::string_view name);

/// Exponents of the Hausdorff-Young sweep.
inline constexpr double kHausdorffYoungExponents[] = {1.0, 1.25, 1.5, 2.0};

/// Draws one well-resolved, decaying corpus member for a grid of radius
/// about 12: a Gaussian, a steep bump, a Hermite-Gaussian or a random
/// band-limited wave packet, with a random scale. Parameters are rounded to
/// six significant digits so the spec string reproduces the sample exactly.
FunctionSpec draw_corpus_member(std::mt19937_64& engine);

struct CertificationOptions {
  Suite suite = Suite::Young;
  int trials = 200;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  /// Overrides the per-check default tolerance when set.
  std::optional<double> tolerance;
};

struct CertificationResult {
  Suite suite = Suite::Young;
  /// Trial-major, then exponent (or triple) order.
  std::vector<InequalityReport> rows;
  double max_ratio = 0.0;
  double max_prior_ratio = std::numeric_limits<double>::quiet_NaN();
  /// Witnesses of the row attaining max_ratio.
  std::vector<std::string> argmax_witness;
  bool all_pass = true;
};

/// Runs trials seeded sweeps. Trial t draws its functions from a
/// mt19937_64 seeded with (seed, t), so the outcome does not depend on
/// `jobs`. Hausdorff-Young trials cover kHausdorffYoungExponents, Young
/// trials cover standard_triples(), L^1 trials one row each. Throws
/// InvalidConfig for trials < 1.
CertificationResult run_certification(const TransformPlan& plan, const CertificationOptions& options);

/// Columns p,q,r,constant,lhs,rhs,ratio,prior_ratio,witness_ids,pass; one
/// row per check and a final row with p = "summary" carrying max ratio,
/// max prior ratio, the argmax witnesses and the overall verdict.
void write_certification_csv(std::ostream& out, const CertificationResult& result);

}  // namespace hbt
