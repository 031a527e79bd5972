#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "pnspace/random.hpp"
#include "pnspace/rng.hpp"
#include "pnspace/sibley.hpp"

namespace {

using namespace pnspace;

constexpr double kTol = 1e-9;

std::vector<double> knot_xs(const DistFn& f, const DistFn& g) {
  std::vector<double> xs;
  for (const Knot& k : f.knots()) xs.push_back(k.x);
  for (const Knot& k : g.knots()) xs.push_back(k.x);
  return xs;
}

TEST(SibleyCondition, Examples) {
  const DistFn h0 = unit_step();
  const DistFn s = step_at(0.5);
  EXPECT_FALSE(sibley::condition_holds(h0, s, 0.4));
  EXPECT_TRUE(sibley::condition_holds(h0, s, 0.6));
  for (double h : {0.01, 0.3, 1.0}) EXPECT_TRUE(sibley::condition_holds(s, s, h));
  EXPECT_THROW(sibley::condition_holds(h0, s, 0.0), std::invalid_argument);
  EXPECT_THROW(sibley::condition_holds(h0, s, 1.5), std::invalid_argument);
}

TEST(SibleyDistance, StepLawAgreesWithGridOracle) {
  const auto h0 = [](double x) { return x <= 0.0 ? 0.0 : 1.0; };
  for (double a : {0.1, 0.5, 2.0}) {
    const auto s = [a](double x) { return x <= a ? 0.0 : 1.0; };
    const double oracle = oracle::sibley_grid(h0, s, {0.0, a}, -1.0, a + 2.0, 10000, 1000);
    ASSERT_NEAR(oracle, std::min(a, 1.0), 1e-4);
    EXPECT_NEAR(sibley::distance(unit_step(), step_at(a)), std::min(a, 1.0), kTol);
  }
}

TEST(SibleyDistance, RandomPairsAgreeWithGridOracle) {
  Rng rng(8);
  for (int i = 0; i < 10; ++i) {
    const DistFn f = random_delta_plus(rng, 1.0);
    const DistFn g = random_delta_plus(rng, 1.0);
    const double oracle = oracle::sibley_grid([&](double x) { return f(x); }, [&](double x) { return g(x); },
                                              knot_xs(f, g), -0.5, 3.0, 2000, 3000);
    EXPECT_NEAR(sibley::distance(f, g), oracle, 1.0 / 2000 + kTol) << i;
  }
}

TEST(SibleyDistance, MetricAxiomsOnSteps) {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const DistFn f = random_step_df(rng, 1.5);
    const DistFn g = random_step_df(rng, 1.5);
    const DistFn k = random_step_df(rng, 1.5);
    EXPECT_LE(sibley::distance(f, f), kTol);
    EXPECT_EQ(sibley::distance(f, g), sibley::distance(g, f));
    EXPECT_LE(sibley::distance(f, k), sibley::distance(f, g) + sibley::distance(g, k) + 2 * kTol);
    EXPECT_LE(sibley::distance(f, g), 1.0);
  }
}

TEST(SibleyDistance, MonotoneFeasibility) {
  Rng rng(10);
  for (int i = 0; i < 100; ++i) {
    const DistFn f = random_delta_plus(rng, 1.0);
    const DistFn g = random_delta_plus(rng, 1.0);
    const double h1 = rng.uniform(0.01, 1.0);
    const double h2 = rng.uniform(h1, 1.0);
    if (sibley::condition_holds(f, g, h1)) {
      EXPECT_TRUE(sibley::condition_holds(f, g, h2));
    }
  }
}

TEST(SibleyDistance, WeakConvergenceWitness) {
  double previous = 2.0;
  for (int m = 1; m <= 64; ++m) {
    const double d = sibley::distance(step_at(1.0 / m), unit_step());
    EXPECT_LE(d, previous + kTol);
    previous = d;
  }
  EXPECT_LT(previous, 1.0 / 64 + kTol);
}

TEST(SibleyDistance, ToUnitMatchesGeneralDistance) {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const DistFn f = random_delta_plus(rng, 2.0);
    EXPECT_NEAR(sibley::distance_to_unit(f), sibley::distance(f, unit_step()), 2 * kTol);
  }
  EXPECT_NEAR(sibley::distance_to_unit(ratio_df(0.5, 512)), sibley::distance(ratio_df(0.5, 512), unit_step()), 2 * kTol);
}

TEST(SibleyDistance, ToUnitRequiresDeltaPlus) {
  const DistFn f = DistFn::from_breakpoints(Interpolation::step, std::vector<std::pair<double, double>>{{-1.0, 1.0}},
                                            0.0, 1.0);
  EXPECT_THROW(sibley::distance_to_unit(f), std::invalid_argument);
  EXPECT_LE(sibley::distance(f, unit_step()), 1.0);  // still defined on Delta
}

TEST(SibleyDistance, RejectsBadTolerance) {
  EXPECT_THROW(sibley::distance(unit_step(), step_at(1.0), sibley::Params{0.0}), std::invalid_argument);
}

}  // namespace
