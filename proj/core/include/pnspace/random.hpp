#pragma once

#include <vector>

#include "pnspace/distfn.hpp"
#include "pnspace/rng.hpp"

namespace pnspace {

/// Random step d.f. in D+ with 1..max_knots jumps located in (0, support].
DistFn random_step_df(Rng& rng, double support, int max_knots = 5);

/// Random continuous piecewise-linear d.f. in Delta+ rising from 0 at a point
/// in [0, support/2) to 1 at `support` (or to a right tail below 1 when
/// `allow_defect` is set).
DistFn random_linear_df(Rng& rng, double support, int max_knots = 5, bool allow_defect = false);

/// Step or linear with equal probability.
DistFn random_delta_plus(Rng& rng, double support, int max_knots = 5);

/// Vector with entries uniform in [-1, 1).
inline std::vector<double> random_vector(Rng& rng, int dim) {
  std::vector<double> v(static_cast<std::size_t>(dim));
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  return v;
}

}  // namespace pnspace
