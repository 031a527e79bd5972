#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "pnspace/nnorm.hpp"
#include "pnspace/random.hpp"
#include "pnspace/rng.hpp"

namespace {

using namespace pnspace;

std::vector<std::vector<double>> gram_matrix(const std::vector<Vector>& t) {
  std::vector<std::vector<double>> g(t.size(), std::vector<double>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < t[i].size(); ++k) s += t[i][k] * t[j][k];
      g[i][j] = s;
    }
  return g;
}

TEST(GramNNorm, ParallelogramArea) {
  const NNormSpace s(3, 2);
  const std::vector<Vector> t{{1, 0, 0}, {0, 2, 0}};
  EXPECT_NEAR(gram_nnorm(s, t), 2.0, 1e-12);
  EXPECT_FALSE(is_dependent(s, t));
}

TEST(GramNNorm, AgreesWithAreaOracle) {
  Rng rng(4);
  const NNormSpace s(4, 2);
  for (int i = 0; i < 200; ++i) {
    const std::vector<Vector> t{random_vector(rng, 4), random_vector(rng, 4)};
    EXPECT_NEAR(gram_nnorm(s, t), oracle::parallelogram_area(t[0], t[1]), 1e-9);
  }
}

TEST(GramNNorm, AgreesWithLaplaceDeterminant) {
  Rng rng(5);
  for (int n = 2; n <= 4; ++n) {
    const NNormSpace s(5, n);
    for (int i = 0; i < 100; ++i) {
      std::vector<Vector> t;
      for (int k = 0; k < n; ++k) t.push_back(random_vector(rng, 5));
      const double det = oracle::det_laplace(gram_matrix(t));
      EXPECT_NEAR(gram_nnorm(s, t), std::sqrt(std::max(det, 0.0)), 1e-9);
    }
  }
}

TEST(GramNNorm, DependentTuplesAreZero) {
  const NNormSpace s(3, 3);
  EXPECT_EQ(gram_nnorm(s, std::vector<Vector>{{1, 2, 3}, {2, 4, 6}, {0, 1, 0}}), 0.0);
  EXPECT_EQ(gram_nnorm(s, std::vector<Vector>{{1, 0, 0}, {0, 0, 0}, {0, 1, 0}}), 0.0);
  EXPECT_TRUE(is_dependent(s, std::vector<Vector>{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
  EXPECT_NEAR(gram_nnorm(s, std::vector<Vector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 3}}), 3.0, 1e-12);
}

TEST(GramNNorm, ScaleInvariantDependenceTest) {
  const NNormSpace s(2, 2);
  const double tiny = 1e-30;
  EXPECT_FALSE(is_dependent(s, std::vector<Vector>{{tiny, 0}, {0, tiny}}));
  EXPECT_TRUE(is_dependent(s, std::vector<Vector>{{1e30, 1e30}, {2e30, 2e30}}));
}

TEST(NNormSpace, Validation) {
  EXPECT_THROW(NNormSpace(3, 1), std::invalid_argument);
  EXPECT_THROW(NNormSpace(2, 3), std::invalid_argument);
  const NNormSpace s(3, 2);
  EXPECT_THROW(gram_nnorm(s, std::vector<Vector>{{1, 0, 0}}), std::invalid_argument);
  EXPECT_THROW(gram_nnorm(s, std::vector<Vector>{{1, 0, 0}, {0, 1}}), std::invalid_argument);
}

TEST(NNormSuite, PassesForSeveralShapes) {
  for (auto [d, n] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 3}, std::pair{5, 4}}) {
    const AxiomReport r = nnorm_axiom_suite(NNormSpace(d, n), 500, 7, 1e-9);
    EXPECT_TRUE(r.all_passed()) << d << "," << n;
    EXPECT_EQ(r.axioms.size(), 5u);
  }
}

TEST(VectorOps, Basics) {
  EXPECT_EQ(add({1, 2}, {3, 4}), (Vector{4, 6}));
  EXPECT_EQ(sub({1, 2}, {3, 4}), (Vector{-2, -2}));
  EXPECT_EQ(scaled({1, 2}, -2.0), (Vector{-2, -4}));
  EXPECT_EQ(dot({1, 2}, {3, 4}), 11.0);
  EXPECT_EQ(norm({3, 4}), 5.0);
}

}  // namespace
