#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "pnspace/random.hpp"
#include "pnspace/rng.hpp"
#include "pnspace/sibley.hpp"
#include "pnspace/triangle.hpp"

namespace {

using namespace pnspace;

std::vector<double> knot_xs(const DistFn& f, const DistFn& g) {
  std::vector<double> xs;
  for (const Knot& k : f.knots()) xs.push_back(k.x);
  for (const Knot& k : g.knots()) xs.push_back(k.x);
  return xs;
}

TriangleOp op_for(TNorm t, TriangleMode mode = TriangleMode::sup_tnorm) {
  TriangleOp op;
  op.base = std::move(t);
  op.mode = mode;
  return op;
}

TEST(Quantile, Examples) {
  const DistFn f = DistFn::from_breakpoints(Interpolation::linear, std::vector<std::pair<double, double>>{{0, 0}, {2, 1}},
                                            0.0, 1.0);
  EXPECT_DOUBLE_EQ(quantile(f, 0.5), 1.0);
  EXPECT_EQ(quantile(f, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(upper_quantile(f, 0.25), 0.5);
  EXPECT_EQ(quantile(step_at(3.0), 0.7), 3.0);
  EXPECT_TRUE(std::isinf(upper_quantile(step_at(3.0), 1.0)));
}

TEST(TauMin, StepsAdd) {
  const TriangleOp op;
  ASSERT_TRUE(op.has_exact_path());
  EXPECT_EQ(op(step_at(0.25), step_at(0.5)), step_at(0.75));
  EXPECT_EQ(op(unit_step(), step_at(2.0)), step_at(2.0));
  EXPECT_EQ(op.error_envelope(step_at(1.0), step_at(2.0)), 0.0);
}

TEST(TauMin, RatioScalesAdd) {
  const DistFn sum = tau_min_exact(ratio_df(1.0, 512), ratio_df(2.0, 512));
  ASSERT_TRUE(sum.has_exact_form());
  EXPECT_DOUBLE_EQ(std::get<exact::Ratio>(sum.exact_form()).scale, 3.0);
  for (double t : {0.1, 1.0, 3.0, 30.0}) EXPECT_NEAR(sum.eval_exact(t), t / (t + 3.0), 1e-15);
}

TEST(TauMin, AgreesWithBruteForce) {
  Rng rng(31);
  const auto tmin = [](double a, double b) { return std::min(a, b); };
  for (int i = 0; i < 20; ++i) {
    const DistFn f = random_delta_plus(rng, 1.0);
    const DistFn g = random_delta_plus(rng, 1.0);
    const DistFn h = tau_min_exact(f, g);
    const auto fx = [&](double x) { return f(x); };
    const auto gx = [&](double x) { return g(x); };
    for (double x = 0.05; x < 2.2; x += 0.173) {
      // the oracle samples s on a grid, so it can only undershoot the supremum
      const double brute = oracle::tau_sup_bruteforce(tmin, fx, gx, knot_xs(f, g), x, 4000);
      EXPECT_GE(h(x) + 1e-9, brute) << i << " x=" << x;
      EXPECT_LE(h(x), oracle::tau_sup_bruteforce(tmin, fx, gx, knot_xs(f, g), x + 2e-3, 4000) + 1e-9)
          << i << " x=" << x;
    }
  }
}

TEST(TauGrid, ProductAgreesWithBruteForceWithinEnvelope) {
  Rng rng(32);
  const TriangleOp op = op_for(TNorm::product());
  const auto prod = [](double a, double b) { return a * b; };
  for (int i = 0; i < 8; ++i) {
    const DistFn f = random_delta_plus(rng, 1.0);
    const DistFn g = random_delta_plus(rng, 1.0);
    const DistFn h = op(f, g);
    const double e = op.error_envelope(f, g);
    ASSERT_GT(e, 0.0);
    ASSERT_LT(e, 0.01);
    const auto fx = [&](double x) { return f(x); };
    const auto gx = [&](double x) { return g(x); };
    for (double x = 0.05; x < 2.2; x += 0.211) {
      const double lower = oracle::tau_sup_bruteforce(prod, fx, gx, knot_xs(f, g), x - e, 4000) - e;
      const double upper = oracle::tau_sup_bruteforce(prod, fx, gx, knot_xs(f, g), x + e, 4000) + e;
      EXPECT_GE(h(x), lower - 1e-9) << i << " x=" << x;
      EXPECT_LE(h(x), upper + 1e-9) << i << " x=" << x;
    }
  }
}

TEST(TauGrid, ForcedGridMatchesExactPathWithinEnvelope) {
  Rng rng(33);
  TriangleOp op;
  op.force_grid = true;
  ASSERT_FALSE(op.has_exact_path());
  for (int i = 0; i < 20; ++i) {
    const DistFn f = random_delta_plus(rng, 1.0);
    const DistFn g = random_delta_plus(rng, 1.0);
    EXPECT_LE(sibley::distance(op(f, g), tau_min_exact(f, g)), op.error_envelope(f, g) + 1e-9);
  }
}

TEST(TauGrid, ResultsStayInDeltaPlus) {
  Rng rng(34);
  for (const TNorm& t : {TNorm::product(), TNorm::lukasiewicz(), TNorm::drastic()}) {
    for (TriangleMode mode : {TriangleMode::sup_tnorm, TriangleMode::inf_tconorm}) {
      const TriangleOp op = op_for(t, mode);
      const DistFn r = op(random_delta_plus(rng, 1.0), random_delta_plus(rng, 1.0));
      EXPECT_TRUE(in_delta_plus(r)) << op.name();
    }
  }
}

TEST(TauGrid, UnitStepIsIdentity) {
  Rng rng(35);
  for (const TNorm& t : {TNorm::product(), TNorm::lukasiewicz()}) {
    const TriangleOp op = op_for(t);
    const DistFn f = random_delta_plus(rng, 1.0);
    EXPECT_LE(sibley::distance(op(f, unit_step()), f), op.error_envelope(f, unit_step()) + 1e-9) << t.name();
  }
}

TEST(TauGrid, InfModeOfStepsIsStepAtSum) {
  // both arguments stay at 0 until s and t have passed their own steps
  const TriangleOp op = op_for(TNorm::minimum(), TriangleMode::inf_tconorm);
  const DistFn r = op(step_at(0.25), step_at(0.5));
  EXPECT_LE(sibley::distance(r, step_at(0.75)), op.error_envelope(step_at(0.25), step_at(0.5)) + 1e-9);
}

TEST(TriangleSuite, PassesOnExactAndGridPaths) {
  EXPECT_TRUE(triangle_axiom_suite(TriangleOp{}, 60, 5, 1e-9).all_passed());
  EXPECT_TRUE(triangle_axiom_suite(op_for(TNorm::product()), 12, 6, 1e-9).all_passed());
}

}  // namespace
