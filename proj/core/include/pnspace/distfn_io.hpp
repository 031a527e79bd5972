#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>

#include "pnspace/distfn.hpp"

namespace pnspace {

/// {"interpolation": "step"|"linear", "breakpoints": [[x,p],...],
///  "left_tail": p, "right_tail": p}
///
/// Throws DistFnError (position-specific) on invariant violations and on
/// structurally malformed input.
DistFn distfn_from_json(const nlohmann::json& j);
DistFn load_distfn(const std::filesystem::path& path);

/// Step functions serialize as "step"; anything else as "linear", with a
/// repeated x encoding an interior jump.
nlohmann::json distfn_to_json(const DistFn& f);

}  // namespace pnspace
