#include "hbt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include <Eigen/Eigenvalues>

#include "hbt/errors.hpp"

namespace hbt {

std::string_view to_string(QuadratureScheme scheme) {
  return scheme == QuadratureScheme::GaussLegendre ? "gauss-legendre" : "trapezoid";
}

QuadratureScheme parse_scheme(std::string_view name) {
  if (name == "gauss-legendre") return QuadratureScheme::GaussLegendre;
  if (name == "trapezoid") return QuadratureScheme::Trapezoid;
  throw InvalidConfig("unknown quadrature scheme '" + std::string(name) + "'");
}

double measure_normalization(double alpha) {
  return 1.0 / (std::exp2(alpha + 0.5) * std::tgamma(alpha + 0.5));
}

double measure_mass(double alpha, double radius) {
  return measure_normalization(alpha) * 2.0 * std::pow(radius, 2.0 * alpha + 1.0) / (2.0 * alpha + 1.0);
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  // P_n(x) and P_n'(x) by the three-term recurrence.
  auto legendre = [n](double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
  };
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const double dx = p / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    const double dp = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

void gauss_jacobi(int n, double a, double b, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n <= 0 || !(a > -1.0) || !(b > -1.0)) throw InvalidConfig("gauss_jacobi needs n > 0 and a, b > -1");
  // Golub-Welsch: eigen-decomposition of the symmetric Jacobi matrix of the
  // monic recurrence.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  const double ab = a + b;
  J(0, 0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    J(k, k) = (b * b - a * a) / (s * (s + 2.0));
    const double beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    J(k, k - 1) = J(k - 1, k) = std::sqrt(beta);
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(J);
  if (eig.info() != Eigen::Success) throw NonConvergence("Gauss-Jacobi eigenvalue iteration failed");
  const double mu0 =
      std::exp2(ab + 1.0) * std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    nodes[i] = eig.eigenvalues()[i];
    const double v = eig.eigenvectors()(0, i);
    weights[i] = mu0 * v * v;
  }
}

GridHandle build_grid(double alpha, double radius, int panels, int points_per_panel, QuadratureScheme scheme) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw InvalidConfig("alpha must be finite and >= 0");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidConfig("radius must be finite and positive");
  if (panels <= 0) throw InvalidConfig("panels must be positive");
  if (points_per_panel <= 0) throw InvalidConfig("points per panel must be positive");
  const auto product = static_cast<std::size_t>(panels) * static_cast<std::size_t>(points_per_panel);
  if (product > kMaxGridNodes) {
    std::ostringstream msg;
    msg << "panels * points_per_panel = " << product << " exceeds " << kMaxGridNodes;
    throw InvalidConfig(msg.str());
  }

  auto grid = std::shared_ptr<QuadratureGrid>(new QuadratureGrid());
  grid->alpha_ = alpha;
  grid->radius_ = radius;
  grid->scheme_ = scheme;
  grid->panels_ = panels;
  grid->points_ = points_per_panel;

  const double c_alpha = measure_normalization(alpha);
  auto weight = [&](double x, double base) { return base * c_alpha * std::pow(std::fabs(x), 2.0 * alpha); };

  if (scheme == QuadratureScheme::GaussLegendre) {
    if (panels % 2 != 0) throw InvalidConfig("Gauss-Legendre grids need an even panel count (0 must be a panel boundary)");
    std::vector<double> ref_nodes;
    std::vector<double> ref_weights;
    gauss_legendre(points_per_panel, ref_nodes, ref_weights);
    const double width = 2.0 * radius / panels;
    const int half = panels / 2;
    // On [0, h]: integral of x^{2a} g = (h/2)^{2a+1} integral of (1+s)^{2a} g(h(1+s)/2) ds.
    const bool singular = alpha != std::floor(alpha);
    std::vector<double> jac_nodes;
    std::vector<double> jac_weights;
    if (singular) gauss_jacobi(points_per_panel, 0.0, 2.0 * alpha, jac_nodes, jac_weights);
    // Build the positive half and mirror it so the node set is exactly symmetric.
    std::vector<double> pos_nodes;
    std::vector<double> pos_weights;
    pos_nodes.reserve(product / 2);
    for (int k = 0; k < half; ++k) {
      const double lo = k * width;
      if (k == 0 && singular) {
        const double scale = c_alpha * std::pow(0.5 * width, 2.0 * alpha + 1.0);
        for (int i = 0; i < points_per_panel; ++i) {
          pos_nodes.push_back(0.5 * width * (jac_nodes[i] + 1.0));
          pos_weights.push_back(scale * jac_weights[i]);
        }
        continue;
      }
      for (int i = 0; i < points_per_panel; ++i) {
        const double x = lo + 0.5 * width * (ref_nodes[i] + 1.0);
        pos_nodes.push_back(x);
        pos_weights.push_back(weight(x, 0.5 * width * ref_weights[i]));
      }
    }
    grid->nodes_.reserve(product);
    grid->weights_.reserve(product);
    for (std::size_t i = pos_nodes.size(); i-- > 0;) {
      grid->nodes_.push_back(-pos_nodes[i]);
      grid->weights_.push_back(pos_weights[i]);
    }
    grid->nodes_.insert(grid->nodes_.end(), pos_nodes.begin(), pos_nodes.end());
    grid->weights_.insert(grid->weights_.end(), pos_weights.begin(), pos_weights.end());
  } else {
    if (product % 2 != 0) throw InvalidConfig("trapezoid grids need an even interval count (0 must be a node)");
    const auto intervals = static_cast<int>(product);
    const int half = intervals / 2;
    const double h = 2.0 * radius / intervals;
    grid->nodes_.resize(intervals + 1);
    grid->weights_.resize(intervals + 1);
    for (int i = 0; i <= half; ++i) {
      const double x = i == half ? radius : i * h;
      const double base = i == half ? 0.5 * h : h;
      grid->nodes_[half + i] = x;
      grid->nodes_[half - i] = -x;
      grid->weights_[half + i] = weight(x, base);
      grid->weights_[half - i] = weight(x, base);
    }
  }
  return grid;
}

bool QuadratureGrid::same_as(const QuadratureGrid& other) const noexcept {
  return this == &other || (alpha_ == other.alpha_ && radius_ == other.radius_ && scheme_ == other.scheme_ &&
                            panels_ == other.panels_ && points_ == other.points_);
}

SampledFunction SampledFunction::zeros(GridHandle grid) {
  const std::size_t n = grid->size();
  return {std::move(grid), std::vector<double>(n, 0.0)};
}

void require_same_grid(const QuadratureGrid& a, const QuadratureGrid& b) {
  if (!a.same_as(b)) throw GridMismatch("functions live on different quadrature grids");
}

namespace {

template <typename Op>
SampledFunction combine(const SampledFunction& a, const SampledFunction& b, Op op) {
  require_same_grid(*a.grid, *b.grid);
  SampledFunction out{a.grid, std::vector<double>(a.values.size())};
  std::transform(a.values.begin(), a.values.end(), b.values.begin(), out.values.begin(), op);
  return out;
}

}  // namespace

SampledFunction operator+(const SampledFunction& a, const SampledFunction& b) { return combine(a, b, std::plus<>{}); }

SampledFunction operator-(const SampledFunction& a, const SampledFunction& b) { return combine(a, b, std::minus<>{}); }

SampledFunction operator*(double scale, const SampledFunction& f) {
  SampledFunction out = f;
  for (double& v : out.values) v *= scale;
  return out;
}

double weighted_integral(const SampledFunction& f) {
  const auto w = f.grid->mu_weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += f.values[i] * w[i];
  return sum;
}

double lp_norm(std::span<const double> values, const QuadratureGrid& grid, double p) {
  if (!(p >= 1.0)) throw InvalidExponent("norm exponent must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::fabs(v));
    return m;
  }
  const auto w = grid.mu_weights();
  double sum = 0.0;
  if (p == 1.0) {
    for (std::size_t i = 0; i < w.size(); ++i) sum += std::fabs(values[i]) * w[i];
    return sum;
  }
  if (p == 2.0) {
    for (std::size_t i = 0; i < w.size(); ++i) sum += values[i] * values[i] * w[i];
    return std::sqrt(sum);
  }
  for (std::size_t i = 0; i < w.size(); ++i) sum += std::pow(std::fabs(values[i]), p) * w[i];
  return std::pow(sum, 1.0 / p);
}

double lp_norm(const SampledFunction& f, double p) { return lp_norm(f.values, *f.grid, p); }

double boundary_ratio(const SampledFunction& f) {
  if (f.values.empty()) return 0.0;
  double peak = 0.0;
  for (double v : f.values) peak = std::max(peak, std::fabs(v));
  if (peak == 0.0) return 0.0;
  return std::max(std::fabs(f.values.front()), std::fabs(f.values.back())) / peak;
}

}  // namespace hbt
