#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pnspace/tnorm.hpp"

namespace pnspace::suite {

/// Configuration of the one-shot acceptance battery. Trial counts default to
/// the acceptance sizes; they can be scaled down for quick runs.
struct Config {
  std::uint64_t seed = 20240601;
  double scale = 1.0;  ///< multiplies every trial count (minimum 1 trial)
  int grid_resolution = 4096;
  /// Replaces the t-norm under test in the t-norm criterion (used to exercise
  /// the failure path).
  std::optional<TNorm> injected_tnorm;
};

struct Criterion {
  int id = 0;
  std::string name;
  bool passed = true;
  double worst_margin = 0.0;
  std::int64_t checks = 0;
  nlohmann::json details = nlohmann::json::object();
};

struct Result {
  std::vector<Criterion> criteria;
  nlohmann::json config;
  bool all_passed() const;
};

/// Criteria 1..11. `progress` (optional) is called after each criterion.
Result run_all(const Config& config, const std::function<void(const Criterion&)>& progress = {});

nlohmann::json to_json(const Result& r);

}  // namespace pnspace::suite
