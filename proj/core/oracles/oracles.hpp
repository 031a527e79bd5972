#pragma once

// Brute-force reference computations. They share no algorithmic code with the
// library: functions enter only as callables (plus the jump locations, which a
// grid scan cannot find on its own).

#include <functional>
#include <vector>

namespace pnspace::oracle {

using Fn = std::function<double(double)>;

/// Smallest h on the grid k / h_resolution (k = 1..h_resolution) such that
/// F(x) <= G(x + h) + h and G(x) <= F(x + h) + h hold on a dense x scan of
/// [x_lo, x_hi] refined around `jumps` and their shifts by -h.
double sibley_grid(const Fn& f, const Fn& g, const std::vector<double>& jumps, double x_lo, double x_hi,
                   int h_resolution = 10000, int x_resolution = 4000);

/// sup over s in (0, x) of T(F(s), G(x - s)) on a uniform s grid refined
/// around the given jumps; both inputs are taken to vanish on (-inf, 0].
double tau_sup_bruteforce(const std::function<double(double, double)>& t, const Fn& f, const Fn& g,
                          const std::vector<double>& jumps, double x, int resolution = 20000);

/// Determinant by cofactor expansion along the first row.
double det_laplace(const std::vector<std::vector<double>>& m);

/// |x| |y| sin(angle(x, y)).
double parallelogram_area(const std::vector<double>& x, const std::vector<double>& y);

/// Worst value of (s+t)/(s+t+a+b) - min(s/(s+a), t/(t+b)) over the grid
/// s, t, a, b in {1..points} / points. Nonnegative iff the scalar inequality
/// holds everywhere on the grid.
double pn5_scalar_worst(int points = 100);

}  // namespace pnspace::oracle
