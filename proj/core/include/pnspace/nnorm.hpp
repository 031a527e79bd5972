#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pnspace/report.hpp"

namespace pnspace {

using Vector = std::vector<double>;

/// R^d with the Euclidean inner product, carrying the Gram-determinant
/// n-norm  ||x_1,...,x_n|| = sqrt(det <x_i, x_j>).
class NNormSpace {
 public:
  /// Requires 2 <= n <= d. `dep_tol` is the relative linear-dependence
  /// threshold on the Gram determinant.
  NNormSpace(int dim, int order, double dep_tol = 1e-10);

  int dim() const { return dim_; }
  int order() const { return order_; }
  double dep_tol() const { return dep_tol_; }

  /// Throws std::invalid_argument unless the tuple has `order` vectors of
  /// length `dim`.
  void validate(std::span<const Vector> tuple) const;

 private:
  int dim_;
  int order_;
  double dep_tol_;
};

struct GramResult {
  double det = 0.0;    ///< Gram determinant (clamped to 0 when dependent)
  double scale = 0.0;  ///< product of squared vector norms
  bool dependent = true;
};

/// Gram determinant of the tuple. The vectors are put in a canonical order
/// first (by direction, independent of sign and of power-of-two scaling), so
/// the result is bit-identical under permutations.
GramResult gram(const NNormSpace& space, std::span<const Vector> tuple);

double gram_nnorm(const NNormSpace& space, std::span<const Vector> tuple);

/// det <= dep_tol * prod ||x_i||^2.
bool is_dependent(const NNormSpace& space, std::span<const Vector> tuple);

/// Randomized check of the n-norm axioms: vanishing exactly on dependent
/// tuples (both directions), permutation invariance, absolute homogeneity in
/// the first slot and the triangle inequality in the first slot, with
/// relative tolerance `tol`.
AxiomReport nnorm_axiom_suite(const NNormSpace& space, int trials, std::uint64_t seed, double tol);

// Small vector helpers shared by the probabilistic layers.
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(const Vector& a, double s);
double dot(const Vector& a, const Vector& b);
double norm(const Vector& a);

}  // namespace pnspace
