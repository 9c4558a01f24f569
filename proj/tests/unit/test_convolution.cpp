#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hbt/convolution.hpp"
#include "hbt/errors.hpp"
#include "hbt/function_spec.hpp"
#include "plans.hpp"

namespace {

using hbt::test::plan_for;

hbt::SampledFunction from(const std::string& spec, const hbt::TransformPlan& plan) {
  return hbt::sample(hbt::parse_function_spec(spec), plan.grid());
}

TEST(Convolution, GaussianSelfConvolutionClosedForm) {
  // H[exp(-x^2/2)] = exp(-lambda^2/2), so the self-convolution has spectrum
  // exp(-lambda^2) and equals 2^{-(a+1/2)} exp(-x^2/4).
  for (double alpha : {0.5, 1.0, 2.5}) {
    const auto& plan = plan_for(alpha);
    const auto g = from("gaussian:1.4142135623730951", plan);
    const auto gg = hbt::convolve(plan, g, g);
    const auto x = plan.grid()->nodes();
    for (std::size_t i = 0; i < x.size(); ++i) {
      ASSERT_NEAR(gg.values[i], std::pow(2.0, -(alpha + 0.5)) * std::exp(-0.25 * x[i] * x[i]), 1e-9) << alpha;
    }
  }
}

TEST(Convolution, GaussianSelfConvolutionUnderRefinement) {
  // N = 1200 and N = 2400 have different nodes, so both are compared with
  // the closed form; agreement within 1e-6 follows from the triangle inequality.
  const double alpha = 1.0;
  for (int panels : {300, 600}) {
    const auto& plan = hbt::test::plan_for(alpha, panels);
    const auto gg = hbt::convolve(plan, from("gaussian:1.4142135623730951", plan), from("gaussian:1.4142135623730951", plan));
    auto exact = hbt::sample({hbt::TestFamily::Gaussian, {2.0}, std::pow(2.0, -(alpha + 0.5))}, plan.grid());
    EXPECT_LT(hbt::lp_norm(gg - exact, 2.0) / hbt::lp_norm(exact, 2.0), 5e-7) << panels;
  }
}

TEST(Convolution, FactorizationResidualDecreasesUnderRefinement) {
  const double alpha = 0.5;
  hbt::KernelParams params;
  params.alpha = alpha;
  double prev = std::numeric_limits<double>::infinity();
  for (int panels : {50, 100, 200}) {
    const auto plan = hbt::build_plan(hbt::build_grid(alpha, 12.0, panels, 4), params);
    const double r = hbt::factorization_residual(plan, from("gaussian:1", plan), from("hermite_gaussian:3", plan));
    EXPECT_LT(r, prev) << panels;
    prev = r;
  }
}

TEST(Convolution, RequiresPositiveAlpha) {
  const auto& plan = plan_for(0.0);
  const auto f = from("gaussian:1", plan);
  EXPECT_THROW(hbt::convolve(plan, f, f), hbt::InvalidConfig);
  EXPECT_THROW(hbt::factorization_residual(plan, f, f), hbt::InvalidConfig);
}

TEST(Convolution, IsCommutativeAndBilinear) {
  const auto& plan = plan_for(1.0);
  const auto f = from("hermite_gaussian:2", plan);
  const auto g = from("random_bandlimited:4,3", plan);
  const auto h = from("gaussian:1.3", plan);
  const auto fg = hbt::convolve(plan, f, g);
  const auto gf = hbt::convolve(plan, g, f);
  const auto lhs = hbt::convolve(plan, f, 2.0 * g + h);
  const auto rhs = 2.0 * fg + hbt::convolve(plan, f, h);
  for (std::size_t i = 0; i < plan.size(); ++i) {
    EXPECT_NEAR(fg.values[i], gf.values[i], 1e-15);
    EXPECT_NEAR(lhs.values[i], rhs.values[i], 1e-13);
  }
}

TEST(Convolution, ZeroAnnihilates) {
  const auto& plan = plan_for(1.0);
  const auto fz = hbt::convolve(plan, from("gaussian:1", plan), hbt::SampledFunction::zeros(plan.grid()));
  for (double v : fz.values) EXPECT_EQ(v, 0.0);
}

TEST(Convolution, FactorizationResidualIsSmall) {
  for (double alpha : {0.5, 1.0, 2.5}) {
    const auto& plan = plan_for(alpha);
    EXPECT_LT(hbt::factorization_residual(plan, from("gaussian:1", plan), from("hermite_gaussian:3", plan)), 1e-7);
  }
}

TEST(Convolution, AssociativityDefectIsSmall) {
  const auto& plan = plan_for(1.0);
  const double defect = hbt::check_associativity(plan, from("gaussian:1", plan), from("hermite_gaussian:1", plan),
                                                 from("gaussian:1.5", plan));
  EXPECT_LT(defect, 1e-10);
  const auto z = hbt::SampledFunction::zeros(plan.grid());
  EXPECT_EQ(hbt::check_associativity(plan, from("gaussian:1", plan), from("bump:10,20", plan), z), 0.0);
}

TEST(YoungConstant, ValuesAndImprovementOverFour) {
  // The exponents always satisfy 2/p + 2/q + 2/r - 3 = 1, so C = sqrt 2.
  for (const auto& t : hbt::admissible_triple_sweep(12)) {
    const double c = hbt::young_constant(t);
    EXPECT_NEAR(c, std::numbers::sqrt2, 1e-12);
    EXPECT_LT(c, hbt::kPriorYoungConstant);
    EXPECT_LT(c, std::pow(std::numbers::sqrt2, 3));
  }
}

TEST(ExponentTriple, AdmissibilityAndConjugates) {
  const auto t = hbt::ExponentTriple::make(2.0, 2.0, 1.0);
  EXPECT_EQ(t.p1, 2.0);
  EXPECT_TRUE(std::isinf(t.r1));
  const auto s = hbt::ExponentTriple::make(1.5, 1.5, 1.5);
  EXPECT_DOUBLE_EQ(s.r1, 3.0);
  EXPECT_THROW(hbt::ExponentTriple::make(1.0, 1.0, 1.0), hbt::InvalidExponent);
  EXPECT_THROW(hbt::ExponentTriple::make(2.0, 2.0, 2.0), hbt::InvalidExponent);
  EXPECT_THROW(hbt::ExponentTriple::make(3.0, 1.0, 1.5), hbt::InvalidExponent);
  EXPECT_THROW(hbt::ExponentTriple::make(0.5, 2.0, 2.0), hbt::InvalidExponent);
  EXPECT_THROW(hbt::conjugate_exponent(0.9), hbt::InvalidExponent);
  EXPECT_EQ(hbt::conjugate_exponent(std::numeric_limits<double>::infinity()), 1.0);
}

TEST(ExponentTriple, SweepCoversEndpoints) {
  const auto sweep = hbt::admissible_triple_sweep(4);
  auto has = [&](double p, double q, double r) {
    for (const auto& t : sweep)
      if (std::fabs(t.p - p) < 1e-12 && std::fabs(t.q - q) < 1e-12 && std::fabs(t.r - r) < 1e-12) return true;
    return false;
  };
  EXPECT_TRUE(has(2, 2, 1));
  EXPECT_TRUE(has(2, 1, 2));
  EXPECT_TRUE(has(1, 2, 2));
  EXPECT_EQ(hbt::standard_triples().size(), 7u);
}

TEST(Young, HoldsOnCorpusPairs) {
  const auto& plan = plan_for(1.0);
  const char* specs[] = {"gaussian:1", "bump:9.5,20", "hermite_gaussian:3", "random_bandlimited:17,5*3"};
  for (const char* a : specs)
    for (const char* b : specs) {
      const auto f = from(a, plan);
      const auto g = from(b, plan);
      for (const auto& t : hbt::standard_triples()) {
        const auto r = hbt::check_young(plan, f, g, t);
        EXPECT_TRUE(r.pass) << a << " " << b << " p=" << t.p << " q=" << t.q << " ratio " << r.ratio;
        EXPECT_LT(r.prior_ratio, r.ratio);
      }
    }
}

TEST(Young, TolerancesDependOnOutputExponent) {
  EXPECT_EQ(hbt::young_tolerance(hbt::ExponentTriple::make(2.0, 2.0, 1.0)), 1e-4);
  EXPECT_EQ(hbt::young_tolerance(hbt::ExponentTriple::make(1.5, 1.5, 1.5)), 1e-6);
}

TEST(BanachL1, HoldsOnCorpusPairs) {
  const auto& plan = plan_for(2.5);
  for (const char* a : {"gaussian:1.2", "hermite_gaussian:5"})
    for (const char* b : {"bump:10,20", "random_bandlimited:2,7"}) {
      const auto r = hbt::check_banach_l1(plan, from(a, plan), from(b, plan));
      EXPECT_TRUE(r.pass) << a << " " << b;
      EXPECT_EQ(r.constant, 4.0);
      EXPECT_FALSE(r.triple.has_value());
    }
}

TEST(Finalize, ZeroOverZeroIsZero) {
  hbt::InequalityReport r;
  r.tolerance = 1e-6;
  hbt::finalize(r);
  EXPECT_EQ(r.ratio, 0.0);
  EXPECT_TRUE(r.pass);
  r.lhs = 1.0;
  hbt::finalize(r);
  EXPECT_TRUE(std::isinf(r.ratio));
  EXPECT_FALSE(r.pass);
}

}  // namespace
