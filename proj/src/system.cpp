#include "turnpike/system.hpp"

namespace turnpike {

// ComparisonFunction and the small value types are header-only; this file
// exists so the target always has a translation unit for them.

}  // namespace turnpike
