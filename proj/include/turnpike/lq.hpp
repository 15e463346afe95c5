#pragma once

#include <complex>

#include "turnpike/dissipativity.hpp"

namespace turnpike {

/// Linear dynamics x+ = Ax + Bu with generalized quadratic cost
/// x'Qx + u'Ru + q'x + r'u, Q = C'C, R positive definite.
struct LqProblem {
  enum class Mode { unconstrained, bounded_interior };

  Mat A, B, Q, R;
  Vec q, r;
  Mat S;  // cross term x'Su; must be zero (rejected otherwise)
  Mode mode = Mode::unconstrained;

  static LqProblem scalar(double a, double b, double qq, double rr, Mode mode);
};

struct UnobservableEigenvalue {
  std::complex<double> mu;
  int multiplicity = 1;
};

/// Eigenvalues mu of A failing the rank test rank[mu I - A; C] == n,
/// ordered by (|mu|, arg mu). Singular values below 1e-8 times the largest
/// count as zero. accuracy_warning is set when the eigensolver residual
/// exceeds 1e-6.
struct UnobservableResult {
  std::vector<UnobservableEigenvalue> eigenvalues;
  bool accuracy_warning = false;
};

UnobservableResult unobservable_eigenvalues(const Mat& A, const Mat& C, double rank_tol = 1e-8);

/// Factor C with Q = C'C from the symmetric eigendecomposition, keeping
/// eigenvalues above 1e-12 (C may have zero rows for Q == 0).
Mat factor_output_matrix(const Mat& Q);

struct LqVerdict {
  LqProblem::Mode mode;
  std::vector<UnobservableEigenvalue> unobservable;
  bool strictly_dissipative = false;
  std::string criterion;  // "detectability |mu|<1" or "boundary-avoidance |mu|!=1"
  bool accuracy_warning = false;
};

/// Unconstrained: strictly dissipative iff every unobservable |mu| < 1.
/// Bounded state set with interior equilibrium: iff every |mu| != 1.
/// Throws UnsupportedCaseError when R is not positive definite or a cross
/// term is present.
LqVerdict lq_strict_dissipativity(const LqProblem& p);

/// Nonnegative W with W <= a1(|x-x^e|) and
/// W(f(x,u)) - W(x) <= -a2(|x-x^e|) + a3(l(x,u)).
struct DetectabilityWitness {
  std::function<double(const Vec&)> W;
  ComparisonFunction a1, a2, a3;
};

struct DetectabilityReport {
  bool passed = false;
  double worst_bound_margin = -kInf;     // max of W - a1 over samples
  double worst_decrease_margin = -kInf;  // max of W(f)-W + a2 - a3(l) over admissible pairs
  long checked_pairs = 0;
  Vec worst_x, worst_u;
};

/// Verifies the two witness inequalities on all admissible sampled pairs.
/// Precondition (checked): l >= 0 on samples and l(x^e,u^e) == 0.
DetectabilityReport check_detectability(const ControlSystem& sys, const Equilibrium& eq,
                                        const DetectabilityWitness& witness, const Grid& samples,
                                        double tolerance = 1e-9);

}  // namespace turnpike
