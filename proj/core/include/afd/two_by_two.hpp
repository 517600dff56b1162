#pragma once

// 2x2 stochastic matrices A = [[t, 1-t], [1-s, s]] with s, t in [0, 1):
// closed-form roots B(mu) and the exact classification of stochastic root
// orders and root limits.

#include <limits>
#include <vector>

#include "afd/roots.hpp"

namespace afd {

/// Tolerance for the singular case s + t = 1 and the symmetric case s = t.
inline constexpr double kBoundaryTol = 1e-12;

struct TwoByTwoParams {
  double s = 0.0;
  double t = 0.0;

  TwoByTwoParams() = default;
  TwoByTwoParams(double s_, double t_);

  /// Second eigenvalue s + t - 1.
  double lambda() const { return s + t - 1.0; }

  /// Reads (s, t) back from a 2x2 stochastic matrix. Throws when a diagonal
  /// entry equals one (outside the [0, 1) parameter range).
  static TwoByTwoParams from_matrix(const StochasticMatrix& a);
};

StochasticMatrix two_by_two_build(const TwoByTwoParams& p);

/// B(mu) = T diag(1, mu) T^{-1}; B(mu)^c = A whenever mu^c = lambda.
ComplexMatrix two_by_two_root(const TwoByTwoParams& p, Complex mu);

/// |log|lambda|| / |log(1-s) - log(1-t)|; infinity when s == t.
double two_by_two_odd_bound(const TwoByTwoParams& p);

struct TwoByTwoClassification {
  DivisibilityReport report;
  std::vector<RealMatrix> limits;
  double odd_bound = std::numeric_limits<double>::infinity();
  bool singular = false;
  // True when lambda or s - t sits within kBoundaryTol of zero.
  bool boundary = false;
};

TwoByTwoClassification two_by_two_classify(const TwoByTwoParams& p);

}  // namespace afd
