// The reference computations are checked against hand-derived values before
// any library result is compared with them.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"

namespace {

using pnspace::oracle::det_laplace;
using pnspace::oracle::parallelogram_area;
using pnspace::oracle::pn5_scalar_worst;
using pnspace::oracle::sibley_grid;
using pnspace::oracle::tau_sup_bruteforce;

double h0(double x) { return x <= 0.0 ? 0.0 : 1.0; }

TEST(Oracle, SibleyGridReproducesStepLaw) {
  for (double a : {0.05, 0.3, 0.75, 2.0}) {
    const auto step = [a](double x) { return x <= a ? 0.0 : 1.0; };
    EXPECT_NEAR(sibley_grid(h0, step, {0.0, a}, -1.0, a + 2.0, 2000, 1000), std::min(a, 1.0), 1.0 / 2000) << a;
  }
}

TEST(Oracle, SibleyGridOfIdenticalFunctionsIsFirstGridPoint) {
  const auto ramp = [](double x) { return std::clamp(x, 0.0, 1.0); };
  EXPECT_DOUBLE_EQ(sibley_grid(ramp, ramp, {0.0, 1.0}, -1.0, 2.0, 1000, 500), 1.0 / 1000);
}

TEST(Oracle, SibleyGridCapsAtOne) {
  const auto zero = [](double) { return 0.0; };
  EXPECT_DOUBLE_EQ(sibley_grid(h0, zero, {0.0}, -2.0, 2.0, 100, 100), 1.0);
}

TEST(Oracle, TauBruteForceOfTwoStepsIsStepAtSum) {
  const auto s1 = [](double x) { return x <= 0.25 ? 0.0 : 1.0; };
  const auto s2 = [](double x) { return x <= 0.5 ? 0.0 : 1.0; };
  const auto tmin = [](double u, double v) { return std::min(u, v); };
  EXPECT_EQ(tau_sup_bruteforce(tmin, s1, s2, {0.25, 0.5}, 0.74), 0.0);
  EXPECT_EQ(tau_sup_bruteforce(tmin, s1, s2, {0.25, 0.5}, 0.76), 1.0);
  EXPECT_EQ(tau_sup_bruteforce(tmin, s1, s2, {0.25, 0.5}, 0.0), 0.0);
}

TEST(Oracle, TauBruteForceUniformProduct) {
  // F = G = uniform on [0,1]; sup_s s (x - s) = x^2 / 4 for x <= 2
  const auto u = [](double x) { return std::clamp(x, 0.0, 1.0); };
  const auto prod = [](double a, double b) { return a * b; };
  EXPECT_NEAR(tau_sup_bruteforce(prod, u, u, {}, 1.0), 0.25, 1e-8);
  EXPECT_NEAR(tau_sup_bruteforce(prod, u, u, {}, 0.5), 0.0625, 1e-8);
}

TEST(Oracle, LaplaceDeterminant) {
  EXPECT_DOUBLE_EQ(det_laplace({{2.0}}), 2.0);
  EXPECT_DOUBLE_EQ(det_laplace({{1, 2}, {3, 4}}), -2.0);
  EXPECT_DOUBLE_EQ(det_laplace({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}), 24.0);
  EXPECT_DOUBLE_EQ(det_laplace({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 0.0);
  EXPECT_DOUBLE_EQ(det_laplace({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), -1.0);
}

TEST(Oracle, ParallelogramArea) {
  EXPECT_NEAR(parallelogram_area({1, 0, 0}, {0, 2, 0}), 2.0, 1e-15);
  EXPECT_NEAR(parallelogram_area({1, 1}, {1, -1}), 2.0, 1e-15);
  EXPECT_EQ(parallelogram_area({0, 0}, {1, 1}), 0.0);
  EXPECT_NEAR(parallelogram_area({1, 0}, {1, 1}), 1.0, 1e-15);
}

TEST(Oracle, ScalarPn5InequalityHoldsOnSmallGrid) {
  EXPECT_GE(pn5_scalar_worst(12), -1e-15);
}

}  // namespace
