#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "hbt/errors.hpp"
#include "hbt/function_spec.hpp"
#include "hbt/transform.hpp"
#include "plans.hpp"

namespace {

using hbt::test::plan_for;

hbt::SampledFunction from(const std::string& spec, const hbt::TransformPlan& plan) {
  return hbt::sample(hbt::parse_function_spec(spec), plan.grid());
}

TEST(Transform, KernelMatrixIsSymmetric) {
  const auto& plan = plan_for(1.0);
  for (std::size_t j = 0; j < plan.size(); j += 37)
    for (std::size_t i = 0; i < plan.size(); i += 41) EXPECT_EQ(plan.kernel(j, i), plan.kernel(i, j));
}

TEST(Transform, GaussianIsAFixedPoint) {
  // exp(-x^2/2) maps to exp(-lambda^2/2) for every alpha under the
  // normalization of mu_alpha.
  for (double alpha : {0.0, 0.5, 1.0, 2.5}) {
    const auto& plan = plan_for(alpha);
    const auto F = hbt::forward_transform(plan, from("gaussian:1.4142135623730951", plan));
    const auto lambda = plan.grid()->nodes();
    for (std::size_t j = 0; j < plan.size(); ++j) {
      ASSERT_NEAR(F.values[j], std::exp(-0.5 * lambda[j] * lambda[j]), 1e-9) << "alpha " << alpha;
    }
  }
}

TEST(Transform, OddGaussianIsAFixedPoint) {
  // x exp(-x^2/2) maps to lambda exp(-lambda^2/2).
  for (double alpha : {0.0, 0.5, 1.0, 2.5}) {
    const auto& plan = plan_for(alpha);
    const auto x = plan.grid()->nodes();
    auto f = hbt::SampledFunction::zeros(plan.grid());
    for (std::size_t i = 0; i < x.size(); ++i) f.values[i] = x[i] * std::exp(-0.5 * x[i] * x[i]);
    const auto F = hbt::forward_transform(plan, f);
    for (std::size_t j = 0; j < plan.size(); ++j) ASSERT_NEAR(F.values[j], f.values[j], 1e-9) << alpha;
  }
}

TEST(Transform, DilationRule) {
  // H[f(x/s)](lambda) = s^{2a+1} H[f](s lambda); with f = exp(-x^2/2),
  // H[exp(-x^2/(2 s^2))] = s^{2a+1} exp(-s^2 lambda^2 / 2).
  const double alpha = 1.0;
  const double s = 0.8;
  const auto& plan = plan_for(alpha);
  const hbt::FunctionSpec spec{hbt::TestFamily::Gaussian, {s * std::numbers::sqrt2}, 1.0};
  const auto F = hbt::forward_transform(plan, hbt::sample(spec, plan.grid()));
  const auto lambda = plan.grid()->nodes();
  for (std::size_t j = 0; j < plan.size(); ++j) {
    ASSERT_NEAR(F.values[j], std::pow(s, 2 * alpha + 1) * std::exp(-0.5 * s * s * lambda[j] * lambda[j]), 1e-9);
  }
}

TEST(Transform, MatchesRefinedTrapezoidAtAlphaZero) {
  // At alpha = 0 the transform is c_0 int exp(-x^2) cas(lambda x) dx with
  // c_0 = 1 / sqrt(2 pi); the oracle is a trapezoid sum on 4x as many nodes.
  const auto& plan = plan_for(0.0);
  const auto F = hbt::forward_transform(plan, from("gaussian:1", plan));
  const auto lambda = plan.grid()->nodes();
  const double radius = 12.0;
  const int intervals = 4 * static_cast<int>(plan.size());
  const double h = 2.0 * radius / intervals;
  for (std::size_t j = 0; j < plan.size(); ++j) {
    double sum = 0.0;
    for (int i = 0; i <= intervals; ++i) {
      const double x = -radius + i * h;
      const double w = (i == 0 || i == intervals) ? 0.5 : 1.0;
      sum += w * std::exp(-x * x) * (std::cos(lambda[j] * x) + std::sin(lambda[j] * x));
    }
    ASSERT_NEAR(F.values[j], h * sum / std::sqrt(2.0 * std::numbers::pi), 1e-8) << lambda[j];
  }
}

TEST(Transform, ZeroMapsToZero) {
  const auto& plan = plan_for(1.0);
  const auto F = hbt::forward_transform(plan, hbt::SampledFunction::zeros(plan.grid()));
  for (double v : F.values) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(hbt::round_trip_error(plan, hbt::SampledFunction::zeros(plan.grid())), 0.0);
  EXPECT_EQ(hbt::plancherel_defect(plan, hbt::SampledFunction::zeros(plan.grid())), 0.0);
}

TEST(Transform, IsLinear) {
  const auto& plan = plan_for(0.5);
  const auto f = from("hermite_gaussian:3", plan);
  const auto g = from("random_bandlimited:5,4", plan);
  const auto lhs = hbt::forward_transform(plan, 2.0 * f + (-3.0) * g);
  const auto Ff = hbt::forward_transform(plan, f);
  const auto Fg = hbt::forward_transform(plan, g);
  for (std::size_t j = 0; j < plan.size(); ++j) {
    EXPECT_NEAR(lhs.values[j], 2.0 * Ff.values[j] - 3.0 * Fg.values[j], 1e-13);
  }
}

TEST(Transform, RoundTripAndPlancherelOnCorpus) {
  for (double alpha : {0.0, 0.5, 1.0, 2.5}) {
    const auto& plan = plan_for(alpha);
    for (const char* spec : {"gaussian:1", "bump:10,20", "hermite_gaussian:4", "random_bandlimited:11,6"}) {
      const auto f = from(spec, plan);
      EXPECT_LT(hbt::round_trip_error(plan, f), 1e-7) << alpha << " " << spec;
      EXPECT_LT(hbt::plancherel_defect(plan, f), 1e-7) << alpha << " " << spec;
    }
  }
}

TEST(Transform, RoundTripImprovesUnderRefinementForHalfIntegerAlpha) {
  const double alpha = 0.5;
  hbt::KernelParams params;
  params.alpha = alpha;
  double prev = 1.0;
  for (int panels : {100, 200}) {
    const auto plan = hbt::build_plan(hbt::build_grid(alpha, 12.0, panels, 4), params);
    const double err = hbt::round_trip_error(plan, from("gaussian:1", plan));
    EXPECT_LT(err, prev / 10.0) << panels;
    prev = err;
  }
}

TEST(Transform, GridMismatchIsRejected) {
  const auto& plan = plan_for(1.0);
  const auto other = hbt::build_grid(1.0, 12.0, 40, 4);
  EXPECT_THROW(hbt::forward_transform(plan, hbt::SampledFunction::zeros(other)), hbt::GridMismatch);
  EXPECT_THROW(hbt::inverse_transform(plan, {other, std::vector<double>(other->size())}), hbt::GridMismatch);
}

TEST(Transform, PlanRequiresMatchingAlpha) {
  hbt::KernelParams params;
  params.alpha = 2.0;
  EXPECT_THROW(hbt::build_plan(hbt::build_grid(1.0, 12.0, 20, 4), params), hbt::InvalidConfig);
}

TEST(Transform, ParallelBuildIsBitIdentical) {
  hbt::KernelParams params;
  params.alpha = 1.5;
  const auto grid = hbt::build_grid(1.5, 12.0, 60, 4);
  const auto serial = hbt::build_plan(grid, params, 1);
  const auto parallel = hbt::build_plan(grid, params, 4);
  for (std::size_t j = 0; j < serial.size(); ++j)
    for (std::size_t i = 0; i < serial.size(); ++i) ASSERT_EQ(serial.kernel(j, i), parallel.kernel(j, i));
}

TEST(Transform, NonConvergenceNamesTheOffendingNode) {
  // Orders 11.5 and 12.5 cannot be evaluated for 45 < |lambda x| < 66.
  hbt::KernelParams params;
  params.alpha = 12.0;
  try {
    hbt::build_plan(hbt::build_grid(12.0, 12.0, 20, 4), params);
    FAIL() << "expected NonConvergence";
  } catch (const hbt::NonConvergence& e) {
    EXPECT_NE(std::string(e.what()).find("lambda="), std::string::npos);
  }
}

TEST(HausdorffYoung, ConstantAndEndpoints) {
  EXPECT_DOUBLE_EQ(hbt::hausdorff_young_constant(1.0), std::numbers::sqrt2);
  EXPECT_DOUBLE_EQ(hbt::hausdorff_young_constant(2.0), 1.0);
  const auto& plan = plan_for(1.0);
  const auto f = from("random_bandlimited:9,5", plan);
  const auto at2 = hbt::check_hausdorff_young(plan, f, 2.0);
  EXPECT_NEAR(at2.ratio, 1.0, 1e-9);
  EXPECT_TRUE(at2.pass);
  EXPECT_EQ(at2.p1, 2.0);
  const auto at1 = hbt::check_hausdorff_young(plan, f, 1.0);
  EXPECT_TRUE(std::isinf(at1.p1));
  EXPECT_LE(at1.ratio, 1.0);
  EXPECT_THROW(hbt::check_hausdorff_young(plan, f, 0.9), hbt::InvalidExponent);
  EXPECT_THROW(hbt::check_hausdorff_young(plan, f, 2.5), hbt::InvalidExponent);
}

TEST(HausdorffYoung, NonNegativeGaussianAtPEqualsOne) {
  for (double alpha : {0.0, 1.0, 2.5}) {
    const auto& plan = plan_for(alpha);
    const auto f = from("gaussian:1", plan);
    const double sup = hbt::lp_norm(hbt::forward_transform(plan, f), std::numeric_limits<double>::infinity());
    EXPECT_LE(sup, std::numbers::sqrt2 * hbt::lp_norm(f, 1.0)) << alpha;
    EXPECT_TRUE(hbt::check_hausdorff_young(plan, f, 1.0).pass) << alpha;
  }
}

TEST(HausdorffYoung, ZeroFunctionPasses) {
  const auto& plan = plan_for(1.0);
  const auto r = hbt::check_hausdorff_young(plan, hbt::SampledFunction::zeros(plan.grid()), 1.5);
  EXPECT_EQ(r.ratio, 0.0);
  EXPECT_TRUE(r.pass);
}

}  // namespace
