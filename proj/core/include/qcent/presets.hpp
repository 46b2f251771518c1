#pragma once
// Named scenario configurations for the figure panels the artifact reproduces.

#include <string>
#include <vector>

#include "qcent/runner.hpp"

namespace qcent {

// Sorted preset names.
std::vector<std::string> preset_names();

// Throws ValidationError("preset.unknown") listing the known names.
ScenarioConfig preset(const std::string& name);

// One-line "name  kind  alpha  E0" summary for CLI listings.
std::string preset_summary(const std::string& name);

}  // namespace qcent
