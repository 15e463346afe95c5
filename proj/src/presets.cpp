#include "turnpike/presets.hpp"

#include <cmath>

namespace turnpike {

namespace {

ControlSystem make_brock_mirman() {
  ControlSystem sys;
  sys.name = "brock-mirman";
  sys.state_dim = 1;
  sys.control_dim = 1;
  sys.state_box = Box::interval(0.0, 10.0);
  sys.control_box = Box::interval(0.01, 10.0);
  sys.dynamics = [](const Vec& /*x*/, const Vec& u) { return u; };
  // Consumption 5 x^0.34 - u must stay positive for the log utility; a
  // nonpositive argument (or negative capital) yields +inf.
  sys.stage_cost = [](const Vec& x, const Vec& u) {
    if (x[0] < 0.0) return kInf;
    double consumption = 5.0 * std::pow(x[0], 0.34) - u[0];
    if (consumption <= 0.0) return kInf;
    return -std::log(consumption);
  };
  return sys;
}

ControlSystem make_invariance() {
  ControlSystem sys;
  sys.name = "invariance";
  sys.state_dim = 1;
  sys.control_dim = 1;
  sys.state_box = Box::interval(-2.0, 2.0);
  sys.control_box = Box::interval(-3.0, 3.0);
  sys.dynamics = [](const Vec& x, const Vec& u) { return Vec(2.0 * x + u); };
  sys.stage_cost = [](const Vec& /*x*/, const Vec& u) { return u[0] * u[0]; };
  return sys;
}

}  // namespace

ControlSystem preset(const std::string& name) {
  if (name == "brock-mirman") return make_brock_mirman();
  if (name == "invariance") return make_invariance();
  std::string valid;
  for (const auto& n : preset_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw LookupError("unknown preset '" + name + "' (valid: " + valid + ")");
}

std::vector<std::string> preset_names() { return {"brock-mirman", "invariance"}; }

}  // namespace turnpike
