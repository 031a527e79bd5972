#pragma once

#include <vector>

#include "pnspace/distfn.hpp"

namespace pnspace::detail {

/// Repairs rounding-level defects in computed knot lists: clamps to [0,1],
/// enforces at <= after and after_j <= at_{j+1}, and drops knots whose x does
/// not strictly increase (keeping the larger right limit).
void enforce_monotone(std::vector<Knot>& knots);

}  // namespace pnspace::detail
