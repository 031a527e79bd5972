#pragma once

#include "pnspace/distfn.hpp"

namespace pnspace::sibley {

struct Params {
  /// Bracket width at which the binary search on h stops.
  double tol = 1e-9;
};

/// The shift condition (F,G;h):
///   F(x-h) - h <= G(x) <= F(x+h) + h  for every x in ]-1/h, 1/h].
/// Decided exactly from the breakpoints of both arguments. Requires 0 < h <= 1.
bool condition_holds(const DistFn& f, const DistFn& g, double h);

/// Sibley distance: inf{h in ]0,1] : (F,G;h) and (G,F;h) both hold}.
///
/// Feasibility is monotone in h, so bisection brackets the infimum. The
/// returned value is always a feasible h, hence it overestimates the true
/// distance by at most params.tol.
double distance(const DistFn& f, const DistFn& g, const Params& params = {});

/// Distance to H0 for F in Delta+. For such F both shift conditions reduce to
/// F(h+) >= 1 - h, so a scalar bisection suffices. Same bias as distance().
double distance_to_unit(const DistFn& f, const Params& params = {});

}  // namespace pnspace::sibley
