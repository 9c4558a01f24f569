#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace hbt {

/// Hoelder conjugate: 1/p + 1/p1 = 1, with 1 <-> infinity.
double conjugate_exponent(double p);

/// Exponents (p, q, r) in [1, 2] with 1/p1 + 1/q1 = 1/r, i.e.
/// 1/p + 1/q + 1/r = 2.
struct ExponentTriple {
  double p = 2.0;
  double q = 2.0;
  double r = 1.0;
  double p1 = 2.0;
  double q1 = 2.0;
  double r1 = std::numeric_limits<double>::infinity();

  /// Validates and fills the conjugates; throws InvalidExponent.
  static ExponentTriple make(double p, double q, double r);
};

/// One trial of a norm inequality lhs <= constant * (input norms).
struct InequalityReport {
  /// "hausdorff_young", "young" or "banach_l1".
  std::string kind;
  /// Single-exponent trials (Hausdorff-Young, L^1 algebra) carry the input
  /// exponent p and the output norm exponent p1 instead of a triple.
  double p = std::numeric_limits<double>::quiet_NaN();
  double p1 = std::numeric_limits<double>::quiet_NaN();
  std::optional<ExponentTriple> triple;
  double lhs = 0.0;
  double constant = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  /// lhs / (4 |f|_p |g|_q), the earlier constant-4 bound; NaN where not applicable.
  double prior_ratio = std::numeric_limits<double>::quiet_NaN();
  double tolerance = 0.0;
  bool pass = false;
  std::vector<std::string> witness_ids;
};

/// Fills ratio and pass from lhs, rhs and tolerance. 0/0 counts as ratio 0.
void finalize(InequalityReport& report);

}  // namespace hbt
