#pragma once

#include <string>

#include "qweight/ame.hpp"
#include "qweight/bundled.hpp"
#include "qweight/io.hpp"

namespace qweight::fixtures {

inline Json bundled_json(const std::string& name) { return Json::parse(bundled_file(name)); }

/// Explicit AME states shipped with the library, by short name ("ame234").
inline MixedState bundled_state(const std::string& name) {
  return state_from_json(bundled_json("states/" + name + ".json"));
}

inline GridSolution bundled_grid(const std::string& name) {
  return grid_from_json(bundled_json("grids/" + name + ".json"));
}

}  // namespace qweight::fixtures
