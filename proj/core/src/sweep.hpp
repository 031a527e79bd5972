#pragma once

// Exact decision of pointwise predicates over a few shifted piecewise-linear
// d.f.'s. Between consecutive breakpoints of the merged set every function is
// affine, so a predicate that is convex along each piece (linear inequalities
// are) holds everywhere iff it holds at every breakpoint value and right limit.

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>

#include "pnspace/distfn.hpp"

namespace pnspace::detail {

inline constexpr std::size_t kMaxSweepFns = 4;

/// x -> fn(x + shift)
struct Shifted {
  const DistFn* fn = nullptr;
  double shift = 0.0;
};

/// Half-open interval (lo, hi]; either end may be infinite.
struct Domain {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
};

using Values = std::array<double, kMaxSweepFns>;

/// Walks the knots of one shifted function in merged order.
class Cursor {
 public:
  Cursor() = default;
  explicit Cursor(const Shifted& s) : knots_(s.fn->knots()), shift_(s.shift) {}

  /// Position of the next unvisited knot in sweep coordinates (+inf at the end).
  double next() const {
    return pos_ < knots_.size() ? knots_[pos_].x - shift_ : std::numeric_limits<double>::infinity();
  }
  void skip_below(double x) {
    while (pos_ < knots_.size() && knots_[pos_].x - shift_ < x) ++pos_;
  }
  /// Sets `at` and `after` to F(x + shift) and F((x + shift)+), advancing
  /// past the knot when x is this function's own breakpoint.
  void eval(double x, double& at, double& after);

 private:
  std::span<const Knot> knots_;
  double shift_ = 0.0;
  std::size_t pos_ = 0;
};

/// Calls pred(values) at every point value and right limit inside the domain
/// (plus tails for infinite ends), where the points are the merged shifted
/// breakpoints and the finite domain ends. Stops and returns false at the
/// first failure.
template <class Pred>
bool all_pieces(std::span<const Shifted> fns, Domain dom, Pred&& pred) {
  const std::size_t n = fns.size();
  if (n > kMaxSweepFns) throw std::invalid_argument("sweep: too many functions");
  constexpr double kInf = std::numeric_limits<double>::infinity();
  Values at{};
  Values after{};
  if (dom.lo == -kInf) {
    for (std::size_t i = 0; i < n; ++i) at[i] = fns[i].fn->left_tail();
    if (!pred(at)) return false;
  }
  if (dom.hi == kInf) {
    for (std::size_t i = 0; i < n; ++i) at[i] = fns[i].fn->right_tail();
    if (!pred(at)) return false;
  }
  std::array<Cursor, kMaxSweepFns> cur;
  for (std::size_t i = 0; i < n; ++i) {
    cur[i] = Cursor(fns[i]);
    cur[i].skip_below(dom.lo);
  }
  bool lo_pending = dom.lo != -kInf;
  bool hi_pending = dom.hi != kInf;
  while (true) {
    double x = kInf;
    for (std::size_t i = 0; i < n; ++i) x = std::min(x, cur[i].next());
    if (lo_pending) x = std::min(x, dom.lo);
    if (hi_pending) x = std::min(x, dom.hi);
    if (x == kInf || x > dom.hi) break;
    if (x == dom.lo) lo_pending = false;
    if (x == dom.hi) hi_pending = false;
    for (std::size_t i = 0; i < n; ++i) cur[i].eval(x, at[i], after[i]);
    if (x > dom.lo && !pred(at)) return false;
    if (x < dom.hi && !pred(after)) return false;
  }
  return true;
}

}  // namespace pnspace::detail
