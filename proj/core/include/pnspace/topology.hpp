#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pnspace/distfn.hpp"
#include "pnspace/nnorm.hpp"
#include "pnspace/pnn.hpp"
#include "pnspace/report.hpp"

namespace pnspace {

class Rng;

/// An ordered basis u_1..u_d of R^d, checked for independence on construction.
class BasisFrame {
 public:
  static BasisFrame standard(int dim);
  /// Throws std::invalid_argument on a shape mismatch or a dependent family.
  static BasisFrame from_vectors(std::vector<Vector> basis, double dep_tol = 1e-10);
  /// Image of the standard basis under 2I + U, U with entries uniform in [-1, 1].
  static BasisFrame random(int dim, Rng& rng);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vector>& vectors() const { return basis_; }
  const Vector& operator[](std::size_t i) const { return basis_[i]; }

 private:
  explicit BasisFrame(std::vector<Vector> basis) : basis_(std::move(basis)) {}
  std::vector<Vector> basis_;
};

/// max over (n-1)-subsets S of the basis of ||x, u_S||. The lift is antitone,
/// so the derived norm is the lift of this value.
double derived_value(const PnnSpace& space, const BasisFrame& frame, const Vector& x);

/// F-infinity_x: pointwise minimum of F_{x, u_S} over all (n-1)-subsets S.
DistFn derived_norm(const PnnSpace& space, const BasisFrame& frame, const Vector& x);

/// y in B(x, t), i.e. F-infinity_{x-y}(t) > 1 - t, with the closed-form
/// evaluator when one is attached. Throws for t <= 0.
bool ball_contains(const PnnSpace& space, const BasisFrame& frame, const Vector& center, double t,
                   const Vector& y);

enum class SequenceKind {
  affine_decay,  ///< x + v / m^p
  geometric,     ///< x + v r^m
  oscillating,   ///< x + (-1)^m c v
  harmonic,      ///< x + (1 + 1/2 + ... + 1/m) v, unbounded
  custom,        ///< explicit list of terms
};

SequenceKind sequence_kind_from_name(std::string_view name);
const char* to_string(SequenceKind k);

/// A sequence x_1, x_2, ... in R^d with its candidate limit. `param` is p,
/// r or c depending on the kind.
struct SequenceSpec {
  SequenceKind kind = SequenceKind::affine_decay;
  Vector limit;
  Vector direction;
  double param = 1.0;
  int length = 2;
  std::vector<Vector> terms;

  /// Throws std::invalid_argument on out-of-range parameters.
  void validate() const;
  /// Term m, 1-based.
  Vector at(int m) const;
  int dim() const { return static_cast<int>(limit.size()); }
};

SequenceSpec sequence_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SequenceSpec& s);

struct TracePoint {
  int m = 0;
  int r = 0;  ///< second index for Cauchy pairs, 0 otherwise
  double distance = 0.0;
};

/// Result of a sequence check. The verdict looks at the tail window
/// [tail_start, horizon] with tail_start = ceil(horizon / 2): the sequence
/// converges when every traced distance there is below eps.
struct ConvergenceVerdict {
  std::string form;
  bool converges = false;
  /// Verdict of the companion criterion: the ball form for check_convergence,
  /// the n-norm form for check_cauchy, and `converges` itself otherwise.
  bool companion = false;
  bool agree = true;
  double eps = 0.0;
  int horizon = 0;
  int tail_start = 0;
  /// Smallest N with every traced distance below eps on [N, horizon]; -1 if none.
  int realized_n = -1;
  std::vector<TracePoint> trace;
  nlohmann::json sampling = nlohmann::json::object();
};

nlohmann::json to_json(const ConvergenceVerdict& v);

/// d_s(F-infinity_{x_m - x}, H0) for m = 1..horizon, plus the ball-form verdict
/// x_m in B(x, eps) on the tail window.
ConvergenceVerdict check_convergence(const PnnSpace& space, const BasisFrame& frame, const SequenceSpec& seq,
                                     double eps, int horizon);

/// Component form: F_{x_m - x, y_2..y_{n-1}, u_i} for every basis vector u_i
/// and `y_samples` random draws of y_2..y_{n-1}. The trace holds the largest
/// component distance at each m.
ConvergenceVerdict check_convergence_componentwise(const PnnSpace& space, const BasisFrame& frame,
                                                   const SequenceSpec& seq, double eps, int horizon,
                                                   int y_samples, std::uint64_t seed);

/// Cauchy check on tail pairs: consecutive pairs (m, m+1) and the strided
/// pairs (m, r) with m, r on the stride lattice from tail_start, always
/// including (tail_start, horizon). `converges` is the derived-norm verdict;
/// `companion` is the sampled n-norm form F_{x_m - x_r, y_2, ..., y_n}.
ConvergenceVerdict check_cauchy(const PnnSpace& space, const BasisFrame& frame, const SequenceSpec& seq,
                                double eps, int horizon, int pair_stride, int y_samples, std::uint64_t seed);

/// Convergence verdicts under two frames must agree on every sequence.
AxiomReport basis_equivalence_report(const PnnSpace& space, const BasisFrame& frame_a, const BasisFrame& frame_b,
                                     std::span<const SequenceSpec> battery, double eps, int horizon);

/// `count` seeded sequences cycling through geometric and affine_decay
/// (convergent) and oscillating and harmonic (divergent) kinds.
std::vector<SequenceSpec> sequence_battery(int dim, int count, std::uint64_t seed, int length);

/// Properties (1)-(3) of the derived norm on random vectors.
AxiomReport derived_norm_suite(const PnnSpace& space, const BasisFrame& frame, int trials, std::uint64_t seed,
                               double tol);

}  // namespace pnspace
