#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pnspace::oracle {

namespace {

constexpr double kNudge = 1e-9;

bool feasible(const Fn& f, const Fn& g, const std::vector<double>& base_xs, const std::vector<double>& jumps, double h) {
  auto ok_at = [&](double x) { return f(x) <= g(x + h) + h + 1e-12 && g(x) <= f(x + h) + h + 1e-12; };
  for (double x : base_xs)
    if (!ok_at(x)) return false;
  for (double b : jumps)
    for (double c : {b, b - h})
      for (double x : {c - kNudge, c, c + kNudge})
        if (!ok_at(x)) return false;
  return true;
}

}  // namespace

double sibley_grid(const Fn& f, const Fn& g, const std::vector<double>& jumps, double x_lo, double x_hi,
                   int h_resolution, int x_resolution) {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(x_resolution) + 1);
  for (int i = 0; i <= x_resolution; ++i) xs.push_back(x_lo + (x_hi - x_lo) * i / x_resolution);
  // feasibility is monotone in h; scan upward and stop at the first feasible point
  for (int k = 1; k <= h_resolution; ++k) {
    const double h = static_cast<double>(k) / h_resolution;
    if (feasible(f, g, xs, jumps, h)) return h;
  }
  return 1.0;
}

double tau_sup_bruteforce(const std::function<double(double, double)>& t, const Fn& f, const Fn& g,
                          const std::vector<double>& jumps, double x, int resolution) {
  if (x <= 0.0) return 0.0;
  double best = 0.0;
  auto probe = [&](double s) {
    if (s > 0.0 && s < x) best = std::max(best, t(f(s), g(x - s)));
  };
  for (int k = 1; k < resolution; ++k) probe(x * k / resolution);
  for (double b : jumps)
    for (double s : {b, x - b})
      for (double e : {-kNudge, 0.0, kNudge}) probe(s + e);
  return best;
}

double det_laplace(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1.0;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  double sum = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<double>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<double> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    sum += (col % 2 == 0 ? 1.0 : -1.0) * m[0][col] * det_laplace(minor);
  }
  return sum;
}

double parallelogram_area(const std::vector<double>& x, const std::vector<double>& y) {
  const double nx = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
  const double ny = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
  if (nx == 0.0 || ny == 0.0) return 0.0;
  const double c = std::clamp(std::inner_product(x.begin(), x.end(), y.begin(), 0.0) / (nx * ny), -1.0, 1.0);
  return nx * ny * std::sin(std::acos(c));
}

double pn5_scalar_worst(int points) {
  if (points < 1) throw std::invalid_argument("pn5_scalar_worst: points must be >= 1");
  double worst = 1.0;
  for (int is = 1; is <= points; ++is)
    for (int it = 1; it <= points; ++it)
      for (int ia = 1; ia <= points; ++ia)
        for (int ib = 1; ib <= points; ++ib) {
          const double s = is, t = it, a = ia, b = ib;  // the inequality is scale-free
          const double lhs = (s + t) / (s + t + a + b);
          const double rhs = std::min(s / (s + a), t / (t + b));
          worst = std::min(worst, lhs - rhs);
        }
  return worst;
}

}  // namespace pnspace::oracle
