#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "pnspace/report.hpp"

namespace pnspace {

enum class TNormKind { minimum, product, lukasiewicz, drastic, custom };

/// A t-norm on [0,1]: one of the four standard ones, or an arbitrary custom
/// two-place function (whose axioms are then up to the axiom suite to check).
class TNorm {
 public:
  using Fn = std::function<double(double, double)>;

  static TNorm minimum() { return TNorm(TNormKind::minimum, "min"); }
  static TNorm product() { return TNorm(TNormKind::product, "prod"); }
  static TNorm lukasiewicz() { return TNorm(TNormKind::lukasiewicz, "luk"); }
  static TNorm drastic() { return TNorm(TNormKind::drastic, "drastic"); }
  static TNorm custom(std::string name, Fn fn);

  /// "min" | "prod" | "luk" | "drastic"; throws std::invalid_argument otherwise.
  static TNorm from_name(std::string_view name);

  TNormKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  /// Checked application; inputs outside [0,1] throw.
  double apply(double a, double b) const;
  double operator()(double a, double b) const { return apply(a, b); }

  /// Dual t-conorm: 1 - T(1-a, 1-b).
  double conorm(double a, double b) const;

  /// Unchecked application for inner loops.
  double raw(double a, double b) const {
    switch (kind_) {
      case TNormKind::minimum: return a < b ? a : b;
      case TNormKind::product: return a * b;
      case TNormKind::lukasiewicz: {
        const double s = a + b - 1.0;
        return s > 0.0 ? s : 0.0;
      }
      case TNormKind::drastic: return b == 1.0 ? a : (a == 1.0 ? b : 0.0);
      case TNormKind::custom: return fn_(a, b);
    }
    return 0.0;
  }

 private:
  TNorm(TNormKind kind, std::string name, Fn fn = {})
      : kind_(kind), name_(std::move(name)), fn_(std::move(fn)) {}

  TNormKind kind_;
  std::string name_;
  Fn fn_;
};

/// Randomized associativity, commutativity, monotonicity in each place and
/// unit law. Arguments are drawn from the dyadic lattice k/1024 so that the
/// closed-form t-norms are evaluated without rounding and pass exactly.
AxiomReport tnorm_axiom_suite(const TNorm& t, int trials, std::uint64_t seed);

}  // namespace pnspace
