#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <deque>

#include <nlohmann/json.hpp>

namespace pnspace {

/// Outcome of one axiom over all trials. `worst_margin` is the smallest slack
/// seen, where slack >= 0 means the individual check passed (for strict
/// checks, > 0).
struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::int64_t checks = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  /// Reproducible witness of the first failure: trial index, derived seed and
  /// the inputs. Null when passed.
  nlohmann::json counterexample;

  /// Records one check. `ok` decides pass/fail; `slack` feeds worst_margin.
  void record(bool ok, double slack, const nlohmann::json& witness = nullptr);
  /// Records without building a witness unless the check failed.
  template <class Witness>
  void check(bool ok, double slack, Witness&& make_witness) {
    if (ok) {
      record(true, slack);
    } else {
      record(false, slack, make_witness());
    }
  }
};

struct AxiomReport {
  std::string suite;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  nlohmann::json config = nlohmann::json::object();
  std::deque<AxiomResult> axioms;  // deque: references stay valid as axioms are added

  bool all_passed() const;
  AxiomResult& axiom(const std::string& name);
  const AxiomResult* find(const std::string& name) const;
};

nlohmann::json to_json(const AxiomResult& r);
nlohmann::json to_json(const AxiomReport& r);

/// Serializes with every floating-point number printed as fixed-point with
/// 12 decimals, keys in sorted order. Deterministic for equal input.
std::string dump_fixed(const nlohmann::json& j, int indent = 2);

/// Fixed 12-decimal rendering used by every numeric output.
std::string fixed12(double v);

}  // namespace pnspace
