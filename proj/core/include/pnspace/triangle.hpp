#pragma once

#include <cstdint>
#include <string>

#include "pnspace/distfn.hpp"
#include "pnspace/report.hpp"
#include "pnspace/tnorm.hpp"

namespace pnspace {

enum class TriangleMode {
  sup_tnorm,    ///< tau_T(F,G)(x)  = sup_{s+t=x} T(F(s), G(t))
  inf_tconorm,  ///< tau_T*(F,G)(x) = inf_{s+t=x} T*(F(s), G(t))
};

/// A triangle function on Delta+ built from a t-norm.
struct TriangleOp {
  TNorm base = TNorm::minimum();
  TriangleMode mode = TriangleMode::sup_tnorm;
  int grid_resolution = 4096;
  /// Use the grid even where the exact quantile-addition path applies.
  bool force_grid = false;

  /// sup-convolution with T = min is computed exactly by quantile addition.
  bool has_exact_path() const;

  DistFn operator()(const DistFn& f, const DistFn& g) const;

  /// Sibley-distance bound between the computed and the true result
  /// (0 on the exact path).
  double error_envelope(const DistFn& f, const DistFn& g) const;

  std::string name() const;
};

/// Lower quantile inf{x : F(x+) >= p}. By convention quantile(F, 0) is 0 for
/// F in Delta+ (the lower end of its support); +inf when p exceeds the right
/// tail.
double quantile(const DistFn& f, double p);

/// Upper quantile sup{x : F(x) <= p}; +inf when p >= the right tail.
double upper_quantile(const DistFn& f, double p);

/// tau_M by quantile addition: the result's quantile at every level is the
/// sum of the inputs' quantiles. Exact up to the rounding of those sums;
/// propagates closed forms (steps add, ratio scales add, H0 is the unit).
DistFn tau_min_exact(const DistFn& f, const DistFn& g);

/// Grid evaluation of tau_T / tau_T* on a uniform lattice of
/// `grid_resolution` cells over [0, last(F) + last(G)], refined with the
/// pairwise sums of breakpoints when the inputs are sparse. Sparse step
/// inputs give exact step outputs; otherwise the sup form is within Sibley
/// distance one lattice cell of the true result (two for the inf form).
DistFn tau_grid(const TriangleOp& op, const DistFn& f, const DistFn& g);

/// Randomized check of associativity (Sibley distance within tol plus the
/// grid error envelopes), exact commutativity, monotonicity (leq with the
/// envelope as margin) and the unit law with H0.
AxiomReport triangle_axiom_suite(const TriangleOp& op, int trials, std::uint64_t seed, double tol);

}  // namespace pnspace
