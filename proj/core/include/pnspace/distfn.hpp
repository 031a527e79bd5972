#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pnspace {

/// Vertex of a left-continuous piecewise-linear distribution function.
/// `at` is the value F(x) and `after` the right limit F(x+); the two differ
/// exactly when F jumps at x.
struct Knot {
  double x = 0.0;
  double at = 0.0;
  double after = 0.0;

  bool operator==(const Knot&) const = default;
};

enum class Interpolation { step, linear };

/// Most specific class a d.f. belongs to. DPlus implies DeltaPlus implies Delta.
enum class DfClass { Delta, DeltaPlus, DPlus, NotDF };

const char* to_string(DfClass c);

/// Closed-form families kept alongside the breakpoint form so that identities
/// which hold exactly can be checked with exact evaluators.
namespace exact {
/// x -> 0 for x <= at, 1 for x > at.
struct Step {
  double at = 0.0;
};
/// t -> t / (t + scale) for t > 0, 0 otherwise. `resolution` records how the
/// breakpoint form was sampled.
struct Ratio {
  double scale = 1.0;
  int resolution = 2;
};
}  // namespace exact

using ExactForm = std::variant<std::monostate, exact::Step, exact::Ratio>;

/// Thrown when breakpoint data violates the d.f. invariants. `index()` is the
/// offending breakpoint (or -1 for whole-object errors).
class DistFnError : public std::invalid_argument {
 public:
  DistFnError(int index, const std::string& what);
  int index() const { return index_; }

 private:
  int index_;
};

/// A distribution function on the extended real line, stored as a finite list
/// of knots with linear pieces in between. Values are left-continuous
/// everywhere: F is constant `left_tail()` on (-inf, x_0] and constant
/// `right_tail()` on (x_last, +inf). The convention F(+inf) = 1 is implicit;
/// `right_tail()` is the left limit at +inf.
///
/// Instances are immutable and always canonical: flat knots that do not
/// change the function are merged away.
class DistFn {
 public:
  /// Validates and canonicalizes. Throws DistFnError with the knot index.
  static DistFn from_knots(std::vector<Knot> knots, ExactForm form = {});

  /// Builds from the (interpolation, breakpoints, tails) description used by
  /// the JSON format.
  ///
  /// step:   F = left_tail on (-inf, x_0], p_j on (x_j, x_{j+1}], p_last
  ///         beyond the last breakpoint; right_tail must equal p_last.
  /// linear: F = left_tail on (-inf, x_0], right limit p_0 at x_0, linear
  ///         between breakpoints with F(x_j) = p_j, right_tail beyond x_last.
  ///         Two consecutive breakpoints with equal x encode a jump at an
  ///         interior point: (x, F(x)) followed by (x, F(x+)).
  static DistFn from_breakpoints(Interpolation interp,
                                 std::span<const std::pair<double, double>> breakpoints,
                                 double left_tail, double right_tail);

  double operator()(double x) const { return value(x); }
  double value(double x) const;
  double right_limit(double x) const;

  /// Uses the closed-form evaluator when one is attached.
  double eval_exact(double x) const;

  double left_tail() const { return knots_.front().at; }
  double right_tail() const { return knots_.back().after; }
  double first_x() const { return knots_.front().x; }
  double last_x() const { return knots_.back().x; }

  std::span<const Knot> knots() const { return knots_; }
  const ExactForm& exact_form() const { return exact_; }
  bool has_exact_form() const { return !std::holds_alternative<std::monostate>(exact_); }

  /// True when every piece is flat, i.e. F is a step function.
  bool is_step() const;

  /// Breakpoint equality; attached exact forms are not compared.
  bool operator==(const DistFn& other) const { return knots_ == other.knots_; }

 private:
  DistFn(std::vector<Knot> knots, ExactForm form)
      : knots_(std::move(knots)), exact_(std::move(form)) {}

  std::vector<Knot> knots_;
  ExactForm exact_;
};

/// H0: 0 for x <= 0, 1 for x > 0.
DistFn unit_step();

/// 0 for x <= a, 1 for x > a. Requires a >= 0.
DistFn step_at(double a);

/// Piecewise-linear sampling of t -> t/(t+c) on the level grid i/resolution,
/// i = 0..resolution-1, extended with right tail 1 beyond the last sample.
/// Sup-norm error against the closed form is at most 1/resolution.
/// ratio_df(0, r) is H0.
DistFn ratio_df(double c, int resolution);

/// Pointwise order F <= G, decided exactly on the union of knots.
bool leq(const DistFn& f, const DistFn& g);

/// F(x) <= G(x + margin) + margin for every x. With margin 0 this is leq.
bool leq_within(const DistFn& f, const DistFn& g, double margin);

/// G(x) = F(x / |lambda|). Breakpoints are multiplied by |lambda|.
DistFn scale_arg(const DistFn& f, double lambda);

DfClass classify(const DistFn& f);

/// Membership predicates for the nested classes.
bool in_delta(const DistFn& f);
bool in_delta_plus(const DistFn& f);
bool in_d_plus(const DistFn& f);

DistFn pointwise_min(std::span<const DistFn> fs);
DistFn pointwise_max(std::span<const DistFn> fs);

}  // namespace pnspace
