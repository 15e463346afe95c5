#pragma once

#include <vector>

#include "turnpike/system.hpp"

namespace turnpike {

/// Named example systems:
///   "brock-mirman": x+ = u, l(x,u) = -log(5 x^0.34 - u), X = [0,10], U = [0.01,10]
///   "invariance":   x+ = 2x + u, l(x,u) = u^2, X = [-2,2], U = [-3,3]
/// Throws LookupError listing the valid names for anything else.
ControlSystem preset(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace turnpike
