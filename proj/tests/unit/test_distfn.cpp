#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "pnspace/distfn.hpp"
#include "pnspace/random.hpp"
#include "pnspace/rng.hpp"

namespace {

using namespace pnspace;
using BP = std::vector<std::pair<double, double>>;

DistFn linear(const BP& bps, double lt = 0.0, double rt = 1.0) {
  return DistFn::from_breakpoints(Interpolation::linear, bps, lt, rt);
}

DistFn step(const BP& bps, double lt = 0.0, double rt = 1.0) {
  return DistFn::from_breakpoints(Interpolation::step, bps, lt, rt);
}

int error_index(const BP& bps, Interpolation interp, double lt = 0.0, double rt = 1.0) {
  try {
    DistFn::from_breakpoints(interp, bps, lt, rt);
  } catch (const DistFnError& e) {
    return e.index();
  }
  return -100;
}

TEST(UnitStep, Values) {
  const DistFn h = unit_step();
  EXPECT_EQ(h(-1.0), 0.0);
  EXPECT_EQ(h(0.0), 0.0);
  EXPECT_EQ(h(1.0), 1.0);
  EXPECT_EQ(h.right_limit(0.0), 1.0);
  EXPECT_EQ(classify(h), DfClass::DPlus);
  EXPECT_EQ(step_at(0.0), h);
}

TEST(StepAt, LeftContinuousAtJump) {
  const DistFn s = step_at(3.0);
  EXPECT_EQ(s(3.0), 0.0);
  EXPECT_EQ(s(std::nextafter(3.0, 4.0)), 1.0);
  EXPECT_EQ(classify(s), DfClass::DPlus);
  EXPECT_THROW(step_at(-1.0), std::invalid_argument);
  EXPECT_THROW(step_at(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST(StepAt, CarriesExactForm) {
  const DistFn s = step_at(2.5);
  ASSERT_TRUE(s.has_exact_form());
  EXPECT_EQ(std::get<exact::Step>(s.exact_form()).at, 2.5);
  EXPECT_EQ(s.eval_exact(2.5), 0.0);
  EXPECT_EQ(s.eval_exact(2.6), 1.0);
}

TEST(FromBreakpoints, StepForm) {
  const DistFn f = step({{0.0, 0.25}, {1.0, 0.5}, {2.0, 1.0}});
  EXPECT_EQ(f(-1.0), 0.0);
  EXPECT_EQ(f(0.0), 0.0);
  EXPECT_EQ(f(0.5), 0.25);
  EXPECT_EQ(f(1.0), 0.25);
  EXPECT_EQ(f(1.5), 0.5);
  EXPECT_EQ(f(2.5), 1.0);
  EXPECT_TRUE(f.is_step());
}

TEST(FromBreakpoints, LinearForm) {
  const DistFn f = linear({{0.0, 0.0}, {1.0, 0.5}, {2.0, 1.0}});
  EXPECT_EQ(f(0.5), 0.25);
  EXPECT_EQ(f(1.5), 0.75);
  EXPECT_EQ(f(3.0), 1.0);
  EXPECT_FALSE(f.is_step());
}

TEST(FromBreakpoints, LinearInteriorJump) {
  const DistFn f = linear({{0.0, 0.0}, {1.0, 0.25}, {1.0, 0.75}, {2.0, 1.0}});
  EXPECT_EQ(f(1.0), 0.25);
  EXPECT_EQ(f.right_limit(1.0), 0.75);
  EXPECT_DOUBLE_EQ(f(1.5), 0.875);
}

TEST(FromBreakpoints, LinearFirstBreakpointIsRightLimit) {
  const DistFn f = linear({{1.0, 0.5}, {2.0, 1.0}});
  EXPECT_EQ(f(1.0), 0.0);
  EXPECT_EQ(f.right_limit(1.0), 0.5);
}

TEST(FromBreakpoints, PositionSpecificErrors) {
  EXPECT_EQ(error_index({{0, 0}, {1, 0.7}, {2, 0.4}, {3, 1}}, Interpolation::linear), 2);
  EXPECT_EQ(error_index({{0, 0}, {1, 1.5}}, Interpolation::linear), 1);
  EXPECT_EQ(error_index({{0, 0}, {2, 0.5}, {1, 1}}, Interpolation::linear), 2);
  EXPECT_EQ(error_index({{0, 0.5}, {1, 0.9}}, Interpolation::step), 1);  // right tail mismatch
  EXPECT_EQ(error_index({{0, 0.1}}, Interpolation::step, 0.5, 0.1), 0);
  EXPECT_EQ(error_index({}, Interpolation::step), -1);
  EXPECT_EQ(error_index({{0, 0.5}}, Interpolation::step, 2.0, 1.0), -1);
}

TEST(FromBreakpoints, ErrorMessageNamesBreakpoint) {
  try {
    linear({{0, 0}, {1, 0.7}, {2, 0.4}, {3, 1}});
    FAIL();
  } catch (const DistFnError& e) {
    EXPECT_NE(std::string(e.what()).find("breakpoints[2]"), std::string::npos);
  }
}

TEST(FromKnots, Canonicalizes) {
  const DistFn a = DistFn::from_knots({{0.0, 0.0, 0.0}, {1.0, 0.0, 1.0}, {2.0, 1.0, 1.0}});
  EXPECT_EQ(a, step_at(1.0));
  EXPECT_EQ(a.knots().size(), 1u);
}

TEST(RatioDf, ZeroScaleIsUnitStep) { EXPECT_EQ(ratio_df(0.0, 16), unit_step()); }

TEST(RatioDf, ExactEvaluatorAndSamplingError) {
  const int res = 256;
  const DistFn r = ratio_df(1.0, res);
  EXPECT_EQ(r.eval_exact(1.0), 0.5);
  EXPECT_EQ(classify(r), DfClass::DPlus);
  for (double t = 0.001; t < 1000.0; t *= 1.1) EXPECT_LE(std::fabs(r(t) - t / (t + 1.0)), 1.0 / res) << t;
  EXPECT_THROW(ratio_df(-1.0, 16), std::invalid_argument);
  EXPECT_THROW(ratio_df(1.0, 1), std::invalid_argument);
}

TEST(Classify, Classes) {
  EXPECT_EQ(classify(step({{-1.0, 1.0}})), DfClass::Delta);
  EXPECT_EQ(classify(linear({{0.0, 0.0}, {1.0, 0.9}}, 0.0, 0.9)), DfClass::DeltaPlus);
  EXPECT_EQ(classify(step({{0.0, 0.5}}, 0.25, 0.5)), DfClass::NotDF);
  EXPECT_STREQ(to_string(DfClass::DeltaPlus), "DeltaPlus");
}

TEST(Leq, Examples) {
  EXPECT_TRUE(leq(step_at(2.0), step_at(1.0)));
  EXPECT_FALSE(leq(step_at(1.0), step_at(2.0)));
  Rng rng(5);
  for (int i = 0; i < 200; ++i) EXPECT_TRUE(leq(random_delta_plus(rng, 2.0), unit_step()));
}

TEST(Leq, Within) {
  EXPECT_FALSE(leq(step_at(1.0), step_at(1.1)));
  EXPECT_TRUE(leq_within(step_at(1.0), step_at(1.1), 0.1 + 1e-12));
  EXPECT_THROW(leq_within(step_at(1.0), step_at(1.1), -1.0), std::invalid_argument);
}

TEST(Leq, PartialOrderOnRandomTriples) {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const DistFn a = random_delta_plus(rng, 1.0);
    const DistFn b = random_delta_plus(rng, 1.0);
    const DistFn c = random_delta_plus(rng, 1.0);
    EXPECT_TRUE(leq(a, a));
    if (leq(a, b) && leq(b, a)) {
      EXPECT_EQ(a, b);
    }
    if (leq(a, b) && leq(b, c)) {
      EXPECT_TRUE(leq(a, c));
    }
  }
}

TEST(ScaleArg, Examples) {
  EXPECT_EQ(scale_arg(step_at(1.0), 2.0), step_at(2.0));
  const DistFn f = linear({{0.0, 0.0}, {0.3, 0.4}, {1.0, 1.0}});
  EXPECT_EQ(scale_arg(f, 1.0), f);
  EXPECT_EQ(scale_arg(f, -1.0), f);
  EXPECT_THROW(scale_arg(f, 0.0), std::invalid_argument);
}

TEST(ScaleArg, GroupActionOnBreakpoints) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const DistFn f = random_delta_plus(rng, 1.0);
    // powers of two keep every product exact
    EXPECT_EQ(scale_arg(scale_arg(f, 2.0), -0.25), scale_arg(f, 0.5));
    const DistFn g = scale_arg(f, 3.0);
    EXPECT_NEAR(g(1.5), f(0.5), 1e-12);
  }
}

TEST(ScaleArg, ScalesExactForms) {
  const DistFn r = scale_arg(ratio_df(2.0, 64), -3.0);
  EXPECT_EQ(std::get<exact::Ratio>(r.exact_form()).scale, 6.0);
  EXPECT_EQ(std::get<exact::Step>(scale_arg(step_at(1.5), 2.0).exact_form()).at, 3.0);
}

TEST(Random, LeftContinuityAndMonotonicity) {
  Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    const DistFn f = random_delta_plus(rng, 2.0);
    const double x = rng.uniform(-0.5, 2.5);
    EXPECT_NEAR(f(x), f(x - 1e-13), 1e-9) << "left limit equals the value";
    for (const Knot& k : f.knots()) {
      const double below = f(k.x - 1e-12);
      EXPECT_NEAR(f(k.x), below, 1e-9) << "left-continuous at knot";
    }
    const double y = x + rng.uniform(0.0, 1.0);
    EXPECT_LE(f(x), f(y));
    EXPECT_TRUE(in_delta_plus(f));
  }
}

TEST(Pointwise, MinAndMax) {
  const DistFn a = linear({{0.0, 0.0}, {1.0, 1.0}});
  const DistFn b = step_at(0.5);
  const std::vector<DistFn> both{a, b};
  const DistFn lo = pointwise_min(both);
  const DistFn hi = pointwise_max(both);
  for (double x : {-1.0, 0.0, 0.25, 0.5, 0.5000001, 0.75, 1.0, 2.0}) {
    EXPECT_DOUBLE_EQ(lo(x), std::min(a(x), b(x))) << x;
    EXPECT_DOUBLE_EQ(hi(x), std::max(a(x), b(x))) << x;
  }
  EXPECT_TRUE(leq(lo, hi));
  EXPECT_THROW(pointwise_min(std::vector<DistFn>{}), std::invalid_argument);
}

TEST(Pointwise, CrossingLinearPieces) {
  const DistFn a = linear({{0.0, 0.0}, {1.0, 1.0}});
  const DistFn b = linear({{0.0, 0.5}, {1.0, 0.6}});
  const std::vector<DistFn> both{a, b};
  const DistFn lo = pointwise_min(both);
  for (double x = 0.0; x <= 1.0; x += 1.0 / 64) EXPECT_NEAR(lo(x), std::min(a(x), b(x)), 1e-12) << x;
}

TEST(Pointwise, MinOfStepsKeepsLatestStep) {
  const std::vector<DistFn> steps{step_at(1.0), step_at(3.0), step_at(2.0)};
  const DistFn m = pointwise_min(steps);
  EXPECT_EQ(m, step_at(3.0));
  EXPECT_EQ(std::get<exact::Step>(m.exact_form()).at, 3.0);
}

}  // namespace
