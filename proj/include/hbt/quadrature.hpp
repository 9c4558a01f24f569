#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hbt {

enum class QuadratureScheme { GaussLegendre, Trapezoid };

std::string_view to_string(QuadratureScheme scheme);
/// Accepts "gauss-legendre" and "trapezoid"; throws InvalidConfig otherwise.
QuadratureScheme parse_scheme(std::string_view name);

/// c_alpha = 1 / (2^{alpha+1/2} Gamma(alpha+1/2)).
double measure_normalization(double alpha);

/// Closed form of mu_alpha([-R, R]) = c_alpha 2 R^{2 alpha + 1} / (2 alpha + 1).
double measure_mass(double alpha, double radius);

/// Symmetric node/weight set on [-R, R] discretizing
///   mu_alpha(dx) = c_alpha |x|^{2 alpha} dx.
///
/// Gauss-Legendre grids use `panels` equal panels (an even count, so that 0
/// is a panel boundary) with `points_per_panel` nodes each. For non-integer
/// alpha the two panels touching 0 use Gauss-Jacobi nodes that absorb the
/// factor |x|^{2 alpha}, which is not smooth there. Trapezoid grids
/// use panels * points_per_panel + 1 equispaced nodes (the product must be
/// even, so that 0 is a node). Immutable once built.
class QuadratureGrid {
 public:
  double alpha() const noexcept { return alpha_; }
  double radius() const noexcept { return radius_; }
  QuadratureScheme scheme() const noexcept { return scheme_; }
  int panels() const noexcept { return panels_; }
  int points_per_panel() const noexcept { return points_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> mu_weights() const noexcept { return weights_; }

  /// Same construction parameters, hence the same node set.
  bool same_as(const QuadratureGrid& other) const noexcept;

 private:
  friend std::shared_ptr<const QuadratureGrid> build_grid(double, double, int, int, QuadratureScheme);
  QuadratureGrid() = default;

  double alpha_ = 0.0;
  double radius_ = 0.0;
  QuadratureScheme scheme_ = QuadratureScheme::GaussLegendre;
  int panels_ = 0;
  int points_ = 0;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

using GridHandle = std::shared_ptr<const QuadratureGrid>;

/// Maximum node count accepted by build_grid (dense transforms are O(N^2)).
inline constexpr std::size_t kMaxGridNodes = 100000;

GridHandle build_grid(double alpha, double radius, int panels, int points_per_panel,
                      QuadratureScheme scheme = QuadratureScheme::GaussLegendre);

/// Gauss-Legendre nodes and weights on [-1, 1], ascending.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Gauss-Jacobi nodes and weights on [-1, 1] for the weight
/// (1 - s)^a (1 + s)^b, ascending; a, b > -1.
void gauss_jacobi(int n, double a, double b, std::vector<double>& nodes, std::vector<double>& weights);

/// Real function sampled at the nodes of a grid.
struct SampledFunction {
  GridHandle grid;
  std::vector<double> values;

  static SampledFunction zeros(GridHandle grid);
};

/// Throws GridMismatch unless both live on the same grid.
void require_same_grid(const QuadratureGrid& a, const QuadratureGrid& b);

SampledFunction operator+(const SampledFunction& a, const SampledFunction& b);
SampledFunction operator-(const SampledFunction& a, const SampledFunction& b);
SampledFunction operator*(double scale, const SampledFunction& f);

/// sum_i f_i w_i.
double weighted_integral(const SampledFunction& f);

/// Discrete L^p_alpha norm; p = infinity gives max |f_i|. Throws
/// InvalidExponent for p < 1.
double lp_norm(std::span<const double> values, const QuadratureGrid& grid, double p);
double lp_norm(const SampledFunction& f, double p);

/// max(|f(-R)|, |f(R)|) / max |f|, or 0 for the zero function.
double boundary_ratio(const SampledFunction& f);

/// Default threshold on boundary_ratio above which truncation of the real
/// line to [-R, R] is reported.
inline constexpr double kBoundaryDecayThreshold = 1e-10;

// ---------------------------------------------------------------------------
// Test-function corpus.

enum class TestFamily { Gaussian, Bump, HermiteGaussian, RandomBandlimited };

std::string_view to_string(TestFamily family);
/// Throws ParseError on an unknown family name.
TestFamily parse_family(std::string_view name);

/// Deterministic corpus member on `grid`.
///
///  gaussian a            exp(-(x/a)^2), a > 0
///  bump s [beta]         exp(beta - beta / (1 - (x/s)^2)) on |x| < s, else 0; beta defaults to 1
///  hermite_gaussian n    H_n(x) exp(-x^2/2) / sqrt(2^n n!), n a non-negative integer
///  random_bandlimited seed bands
///                        exp(-x^2 / (2 s^2)) sum_k (a_k cos w_k x + b_k sin w_k x) with
///                        s in [0.9, 1.4], w_k in [0, 3], a_k, b_k in [-1, 1] drawn
///                        from a mt19937_64 stream seeded with `seed`
///
/// Throws InvalidConfig on bad arity or out-of-range parameters.
SampledFunction make_test_function(TestFamily family, std::span<const double> params, const GridHandle& grid);

}  // namespace hbt
