#pragma once

// Dense complex matrix kernels for small matrices: spectral decomposition with
// eigenvalue clustering and Jordan structure, p-th roots of Jordan blocks,
// matrix powers, exponential and principal logarithm.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "afd/error.hpp"

namespace afd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Largest dimension accepted by the generic spectral path.
inline constexpr int kMaxGenericDimension = 16;

/// Relative eigenvalue clustering radius (scaled by the infinity norm).
inline constexpr double kClusterRelTol = 1e-8;

/// Relative singular-value cutoff used for rank decisions.
inline constexpr double kRankRelTol = 1e-10;

/// Branch of the p-th root function: z -> |z|^{1/p} exp(i (Arg z + 2 pi j) / p).
struct RootBranch {
  int p = 1;
  int j = 0;

  RootBranch() = default;
  RootBranch(int order, int index);
};

struct EigenDecomposition {
  // Distinct eigenvalues (cluster means). Zero is listed when A is singular.
  std::vector<Complex> eigenvalues;
  std::vector<int> multiplicities;
  // Jordan block sizes per eigenvalue, largest first.
  std::vector<std::vector<int>> block_sizes;
  // Columns span the generalized eigenspaces, grouped in eigenvalue order;
  // eigenvalue k owns columns [offsets[k], offsets[k] + multiplicities[k]).
  ComplexMatrix right_basis;
  // Inverse of right_basis; its rows are the dual (left) generalized
  // eigenvectors in the same grouping.
  ComplexMatrix left_basis;
  std::vector<int> offsets;
  double tolerance = 0.0;

  int dimension() const { return static_cast<int>(right_basis.rows()); }
  std::size_t distinct_count() const { return eigenvalues.size(); }

  /// Index of the distinct eigenvalue within `radius` of z, or -1.
  int find(Complex z, double radius) const;

  /// Restriction of `A` to the generalized eigenspace of eigenvalue k.
  ComplexMatrix restrict(const ComplexMatrix& a, std::size_t k) const;

  /// Columns of right_basis for eigenvalue k.
  ComplexMatrix right_block(std::size_t k) const;
  /// Rows of left_basis for eigenvalue k.
  ComplexMatrix left_block(std::size_t k) const;

  /// True when every eigenvalue has only 1x1 Jordan blocks.
  bool diagonalizable() const;
};

double inf_norm(const ComplexMatrix& a);
double inf_norm(const RealMatrix& a);

/// max |Im a_ij|.
double max_imag(const ComplexMatrix& a);

void require_square(const ComplexMatrix& a, const char* what);

/// Numerical rank with absolute singular-value cutoff.
int numerical_rank(const ComplexMatrix& a, double cutoff);

/// Spectrum with clustered eigenvalues and Jordan block sizes.
///
/// `tol` is the clustering radius; a non-positive value selects the default
/// kClusterRelTol * max(1, ||A||_inf). Block sizes come from the rank
/// sequence of (A - lambda I)^k with singular-value cutoff
/// kRankRelTol * max(1, ||A - lambda I||_inf)^k.
EigenDecomposition spectrum(const ComplexMatrix& a, double tol = 0.0);

Complex scalar_root_branch(Complex lambda, RootBranch branch);

/// Generalized binomial coefficients C(x, 0..count-1).
std::vector<double> generalized_binomials(double x, int count);

/// Upper triangular Toeplitz p-th root of the Jordan block J_m(lambda) on the
/// given branch.
ComplexMatrix jordan_block_root(Complex lambda, int m, RootBranch branch);

/// The m x m Jordan block with eigenvalue lambda.
ComplexMatrix jordan_block(Complex lambda, int m);

ComplexMatrix matrix_power(const ComplexMatrix& b, unsigned c);
RealMatrix matrix_power(const RealMatrix& b, unsigned c);

/// Eigen MatrixFunctions exponential (Pade scaling and squaring).
ComplexMatrix matrix_exp(const ComplexMatrix& q);
RealMatrix matrix_exp(const RealMatrix& q);

/// Principal logarithm through Eigen MatrixFunctions: spectrum of the result
/// lies in Im in (-pi, pi).
/// Throws ErrorKind::no_principal_log when an eigenvalue lies on (-inf, 0].
ComplexMatrix matrix_log_principal(const ComplexMatrix& a);

/// The directed n-cycle adjacency matrix: entry (i, i+1 mod n) is one.
RealMatrix cycle_matrix(int n);

RealMatrix direct_sum(const RealMatrix& a, const RealMatrix& b);

}  // namespace afd
