#pragma once

// Brute-force reference checks, written against Eigen and plain arithmetic
// only so they share no code path with the root engine or the family modules.

#include <Eigen/Dense>
#include <vector>

namespace afd::oracle {

struct GridSpec {
  double s_lo = 0.0, s_hi = 1.0;
  int s_steps = 400;
  double t_lo = 0.0, t_hi = 1.0;
  int t_steps = 400;
};

/// Stochastic c-th roots [[t', 1-t'], [1-s', s']] of the 2x2 matrix `a`,
/// found by a grid scan of (s', t') followed by Newton refinement from each
/// grid-local minimum of the residual. Duplicates within 1e-6 are merged.
std::vector<Eigen::MatrixXd> brute_force_2x2_roots(const Eigen::MatrixXd& a, int c,
                                                   const GridSpec& grid = {});

/// min(g1, g2, g3) >= 0 for the circulant parameters (s, t), evaluated from
/// the defining sine formulas.
bool direct_region_eval(double s, double t);

/// Number of p-th roots V diag(mu) V^{-1} (one p-th root mu per eigenvalue)
/// that are real, nonnegative and row-stochastic at 1e-9. Requires distinct
/// nonzero eigenvalues; a zero eigenvalue may repeat if it is semisimple.
int exhaustive_branch_check(const Eigen::MatrixXcd& a, int p);

}  // namespace afd::oracle
