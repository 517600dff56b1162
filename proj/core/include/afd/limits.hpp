#pragma once

// Limits of root sequences: multiplicity rearrangement matrices for (A, L)
// pairs, the candidate limits (direct sums of cycles), arbitrarily finely
// divisible matrices L exp(Q), and empirical clustering of root sequences.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "afd/roots.hpp"

namespace afd {

/// Singular-value cutoff for subspace intersection dimensions.
inline constexpr double kIntersectionCutoff = 1e-9;

struct RearrangementMatrix {
  std::vector<Complex> row_labels;  // distinct nonzero eigenvalues of A
  std::vector<Complex> col_labels;  // distinct nonzero eigenvalues of L
  std::vector<int> row_multiplicities;
  std::vector<int> col_multiplicities;
  Eigen::MatrixXi entries;  // dim(E(lambda, A) cap E(nu, L))

  int row_index(Complex z, double radius = 1e-8) const;
  int col_index(Complex z, double radius = 1e-8) const;
};

/// M[lambda, nu] = dim U + dim V - rank([U V]) over the generalized
/// eigenspaces. Throws ErrorKind::ill_conditioned when a rank decision has no
/// clear singular-value gap around the cutoff.
RearrangementMatrix rearrangement_matrix(const ComplexMatrix& a, const ComplexMatrix& l,
                                         double cutoff = kIntersectionCutoff);

enum class RootParity { unknown, even, odd };

/// Violated constraints (empty when M is consistent with A and L).
std::vector<std::string> validate_rearrangement(const RearrangementMatrix& m,
                                                const ComplexMatrix& a, const ComplexMatrix& l,
                                                RootParity parity = RootParity::unknown);

struct LimitCandidate {
  std::vector<int> partition;  // cycle lengths, in block order
  RealMatrix realization;      // direct sum of the cycles
  int l0 = 1;                  // lcm of the cycle lengths
};

/// One candidate per integer partition of n, parts in nonincreasing order,
/// partitions in reverse lexicographic order ({n} first, {1,...,1} last).
std::vector<LimitCandidate> limit_candidates(int n);

/// Candidate with the given cycle lengths in the given block order.
LimitCandidate make_limit_candidate(const std::vector<int>& parts);

/// A = L exp(Q). Throws ErrorKind::not_generator or ErrorKind::not_commuting.
StochasticMatrix construct_afd(const LimitCandidate& l, const RealMatrix& q);

/// The (k l0 + 1)-th root L exp(Q / (k l0 + 1)) of construct_afd(l, q).
RealMatrix construct_afd_witness(const LimitCandidate& l, const RealMatrix& q, int k);

struct AccumulationPoint {
  RealMatrix center;
  int members = 0;
  int first_c = 0;
  int last_c = 0;
  // True when the cluster keeps collecting members up to the end of the range.
  bool empirical = false;
  // Partition of the matched candidate and the permutation `perm` with
  // center(i, j) ~ realization(perm[i], perm[j]) when a match exists.
  std::optional<std::vector<int>> matched_partition;
  std::vector<int> permutation;
  double match_distance = 0.0;
};

/// Greedy clustering of a root sequence (sorted by c) in the infinity norm.
/// Each root joins the cluster whose newest member is nearest within
/// `radius`, otherwise it opens a new cluster.
std::vector<AccumulationPoint> accumulation_points(
    const std::vector<std::pair<int, StochasticMatrix>>& roots, double radius);

/// Best simultaneous-permutation match of `m` against the candidates of its
/// dimension; exhaustive for n <= 6, ErrorKind::unsupported beyond.
struct PermutationMatch {
  std::vector<int> partition;
  std::vector<int> permutation;
  double distance = 0.0;
};
std::optional<PermutationMatch> match_limit_candidate(const RealMatrix& m, double radius);

}  // namespace afd
