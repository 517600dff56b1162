#pragma once

// Irreducible rank-two stochastic matrices of the block form
//
//   B(alpha, mu) = 1/(1+alpha) [[(alpha+mu) 1 w^T, (1-mu) 1 v^T],
//                               [alpha(1-mu) 1 w^T, (1+alpha mu) 1 v^T]]
//
// whose nonzero spectrum is {1, mu}. B(alpha, .) is multiplicative in mu.

#include <optional>
#include <string>
#include <vector>

#include "afd/roots.hpp"

namespace afd {

/// Singular-value threshold (relative to ||A||) for declaring rank two.
inline constexpr double kRankTwoRelTol = 1e-8;

struct RankTwoParams {
  RealVector w;  // positive, sums to one, length n1
  RealVector v;  // positive, sums to one, length n2
  double alpha = 1.0;
  double lambda = 0.5;

  RankTwoParams() = default;
  /// Validates w, v, alpha > 0 and lambda in (-1, 1) \ {0}. The sign rule
  /// relating lambda and alpha is checked by rank_two_build.
  RankTwoParams(RealVector w_, RealVector v_, double alpha_, double lambda_);

  int n1() const { return static_cast<int>(w.size()); }
  int n2() const { return static_cast<int>(v.size()); }
  /// (lambda > 0 and alpha > 0) or (lambda < 0 and alpha = 1).
  bool admissible(double tol = 1e-12) const;
};

/// B(alpha, lambda). Throws ErrorKind::invalid_argument when lambda < 0 and
/// alpha != 1.
StochasticMatrix rank_two_build(const RankTwoParams& p);

/// B(alpha, mu) for any real mu; stochastic iff mu in [max(-alpha, -1/alpha), 1].
ComplexMatrix rank_two_root(const RankTwoParams& p, double mu);

/// Lower end max(-alpha, -1/alpha) of the stochastic mu range.
double rank_two_mu_min(double alpha);

struct RankTwoClassification {
  std::optional<RankTwoParams> params;
  // A(order, order) == rank_two_build(*params) when params is set; the first
  // n1 entries of `order` index block one.
  std::vector<int> order;
  std::optional<std::string> rejection;
  DivisibilityReport report;
};

/// Matches A against the block form up to a simultaneous permutation.
/// ALL_N for lambda > 0, ODD_N for lambda < 0 with alpha = 1; otherwise the
/// rejection reason is set and the report is sampled with the root engine.
/// Throws ErrorKind::rank_mismatch when rank(A) != 2 and
/// ErrorKind::reducible for reducible input.
RankTwoClassification rank_two_classify(const StochasticMatrix& a, int c_max = 12);

/// True when A has numerical rank two under kRankTwoRelTol.
bool has_rank_two(const RealMatrix& a);

}  // namespace afd
