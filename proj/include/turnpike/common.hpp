#pragma once

#include <Eigen/Dense>
#include <limits>
#include <stdexcept>
#include <string>

namespace turnpike {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const Vec& v) { return v.allFinite(); }

// Tolerance for x(t+1) == f(x(t),u(t)) when checking stored trajectories.
inline constexpr double kDynamicConsistencyTol = 1e-9;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LookupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericOverflowError : std::runtime_error {
  int step;
  NumericOverflowError(const std::string& msg, int step_) : std::runtime_error(msg), step(step_) {}
};

struct ConsistencyError : std::runtime_error {
  int index;
  ConsistencyError(const std::string& msg, int index_) : std::runtime_error(msg), index(index_) {}
};

struct InfeasibleError : std::runtime_error {
  int layer;  // earliest layer (0-based time step) at which no control was feasible
  InfeasibleError(const std::string& msg, int layer_) : std::runtime_error(msg), layer(layer_) {}
};

struct EnumerationBoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RejectedCandidateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedCaseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FeasibilityLossError;  // defined in mpc.hpp, carries the partial run

inline Vec scalar_vec(double v) {
  Vec x(1);
  x[0] = v;
  return x;
}

}  // namespace turnpike
