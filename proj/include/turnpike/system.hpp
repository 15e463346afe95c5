#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "turnpike/common.hpp"

namespace turnpike {

/// Axis-aligned box of admissible vectors, one closed interval per coordinate.
struct Box {
  Vec lower;
  Vec upper;

  int dim() const { return static_cast<int>(lower.size()); }

  bool contains(const Vec& v, double tol = 0.0) const {
    for (int i = 0; i < dim(); ++i) {
      if (v[i] < lower[i] - tol || v[i] > upper[i] + tol) return false;
    }
    return true;
  }

  double diameter() const { return (upper - lower).norm(); }

  static Box interval(double lo, double hi) {
    Box b;
    b.lower = scalar_vec(lo);
    b.upper = scalar_vec(hi);
    return b;
  }

  void validate() const {
    if (lower.size() != upper.size() || lower.size() == 0)
      throw DomainError("box bounds must be nonempty and of equal dimension");
    for (int i = 0; i < dim(); ++i)
      if (!(lower[i] <= upper[i]))
        throw DomainError("box is empty: lower > upper at coordinate " + std::to_string(i));
  }
};

using DynamicsFn = std::function<Vec(const Vec&, const Vec&)>;
using StageCostFn = std::function<double(const Vec&, const Vec&)>;  // +inf encodes a domain violation

/// Discrete-time control system x+ = f(x,u) with stage cost and admissible boxes.
struct ControlSystem {
  int state_dim = 0;
  int control_dim = 0;
  DynamicsFn dynamics;
  StageCostFn stage_cost;
  Box state_box;
  Box control_box;
  std::string name;

  void validate() const {
    if (state_dim < 1 || control_dim < 1) throw DomainError("dimensions must be positive");
    state_box.validate();
    control_box.validate();
    if (state_box.dim() != state_dim || control_box.dim() != control_dim)
      throw DomainError("box dimensions do not match system dimensions");
    if (!dynamics || !stage_cost) throw DomainError("dynamics and stage cost must be set");
  }
};

/// Time-indexed state sequence x(0..T) with aligned controls u(0..T-1).
struct Trajectory {
  std::vector<Vec> states;
  std::vector<Vec> controls;

  int horizon() const { return static_cast<int>(controls.size()); }

  void validate_shape() const {
    if (states.size() != controls.size() + 1)
      throw DomainError("trajectory must have exactly horizon+1 states");
  }
};

/// Controlled fixed point f(x^e,u^e)=x^e with its cost and, when computed by
/// the equilibrium solver, the multiplier of the constraint f(x,u)-x = 0.
struct Equilibrium {
  Vec state;
  Vec control;
  double cost = 0.0;
  std::optional<Vec> multiplier;
  bool refined = true;  // false when the Newton polish failed and a grid pair was returned
};

/// K-infinity candidate: c * r^q with c > 0, q >= 1, or a tabulated
/// strictly increasing profile (linearly interpolated, linear extension).
class ComparisonFunction {
 public:
  static ComparisonFunction power(double c, double q) {
    if (!(c > 0.0)) throw DomainError("comparison function coefficient must be positive");
    if (!(q >= 1.0)) throw DomainError("comparison function exponent must be >= 1");
    ComparisonFunction f;
    f.c_ = c;
    f.q_ = q;
    return f;
  }

  static ComparisonFunction tabulated(std::vector<double> r, std::vector<double> v) {
    if (r.size() != v.size() || r.size() < 2) throw DomainError("tabulated form needs >= 2 samples");
    if (r.front() != 0.0 || v.front() != 0.0) throw DomainError("tabulated form must start at (0,0)");
    for (size_t i = 1; i < r.size(); ++i)
      if (!(r[i] > r[i - 1]) || !(v[i] > v[i - 1]))
        throw DomainError("tabulated form must be strictly increasing");
    ComparisonFunction f;
    f.r_ = std::move(r);
    f.v_ = std::move(v);
    return f;
  }

  double operator()(double r) const {
    if (r <= 0.0) return 0.0;
    if (r_.empty()) return c_ * std::pow(r, q_);
    // piecewise linear, extended past the last knot with the final slope
    size_t i = 1;
    while (i + 1 < r_.size() && r > r_[i]) ++i;
    double t = (r - r_[i - 1]) / (r_[i] - r_[i - 1]);
    return v_[i - 1] + t * (v_[i] - v_[i - 1]);
  }

  bool is_power() const { return r_.empty(); }
  double coeff() const { return c_; }
  double exponent() const { return q_; }

 private:
  double c_ = 1.0;
  double q_ = 2.0;
  std::vector<double> r_, v_;
};

}  // namespace turnpike
