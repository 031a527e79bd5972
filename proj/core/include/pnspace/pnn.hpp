#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>

#include "pnspace/distfn.hpp"
#include "pnspace/nnorm.hpp"
#include "pnspace/report.hpp"
#include "pnspace/triangle.hpp"

namespace pnspace {

/// How a classical n-norm value c is lifted to a distribution function.
enum class Construction {
  simple,    ///< step_at(c): H0 shifted by the n-norm
  standard,  ///< t -> t / (t + c)
};

Construction construction_from_name(std::string_view name);
const char* to_string(Construction c);

/// A probabilistic n-normed space (L, F, tau) over R^d.
struct PnnSpace {
  NNormSpace base;
  Construction construction = Construction::simple;
  TriangleOp tau{};
  /// Sampling resolution of the discretized standard construction.
  int ratio_resolution = 1024;
};

/// The lifted d.f. of a nonnegative n-norm value. Antitone in c, so the
/// pointwise minimum of lifts is the lift of the maximum.
DistFn lift(const PnnSpace& space, double c);

/// F_{x_1,...,x_n}. Dependent tuples give H0 exactly.
DistFn pnn_eval(const PnnSpace& space, std::span<const Vector> tuple);

/// Randomized verification of (Pn-N1)..(Pn-N5) plus codomain membership.
/// Pn-N1/Pn-N2 use the Sibley distance to H0 against tol, Pn-N3 exact
/// equality, Pn-N4 the scaling identity (Sibley distance for step lifts,
/// exact evaluators for ratio lifts) and Pn-N5 leq with the convolution
/// error envelope as margin.
AxiomReport pnn_axiom_suite(const PnnSpace& space, int trials, std::uint64_t seed, double tol);

/// A candidate probabilistic norm: vector -> d.f.
using ProbNorm = std::function<DistFn(const Vector&)>;

/// Randomized verification of (PN1)..(PN4) for nu on R^dim. PN4 is sampled on
/// an alpha grid of [0,1] and checked against tau_star.
AxiomReport pn_axiom_suite(const ProbNorm& nu, int dim, const TriangleOp& tau, const TriangleOp& tau_star,
                           int trials, std::uint64_t seed, double tol);

/// nu(lambda p) against scale_arg(nu(p), lambda) by Sibley distance, plus the
/// closed-form evaluators when both sides carry one.
AxiomReport serstnev_check(const ProbNorm& nu, int dim, int trials, std::uint64_t seed, double tol);

}  // namespace pnspace
