#pragma once

#include <optional>

#include "afd/numerics.hpp"

namespace afd {

/// Default nonnegativity / row-sum tolerance for stochastic checks.
inline constexpr double kStochasticTol = 1e-9;

/// A validated row-stochastic matrix: entries >= -tol and row sums within tol
/// of one. Entries in (-tol, 0) are stored clamped to zero.
class StochasticMatrix {
 public:
  /// Throws ErrorKind::not_stochastic (or not_square) when validation fails.
  static StochasticMatrix from(const RealMatrix& m, double tol = kStochasticTol);

  /// Accepts a complex matrix whose imaginary parts are all within tol.
  static StochasticMatrix from(const ComplexMatrix& m, double tol = kStochasticTol);

  /// Validation without throwing.
  static std::optional<StochasticMatrix> try_from(const RealMatrix& m,
                                                  double tol = kStochasticTol);
  static std::optional<StochasticMatrix> try_from(const ComplexMatrix& m,
                                                  double tol = kStochasticTol);

  static StochasticMatrix identity(int n);

  const RealMatrix& matrix() const { return matrix_; }
  ComplexMatrix complex() const { return matrix_.cast<Complex>(); }
  double tol() const { return tol_; }
  int size() const { return static_cast<int>(matrix_.rows()); }
  bool irreducible() const { return irreducible_; }

  double operator()(int i, int j) const { return matrix_(i, j); }

 private:
  StochasticMatrix(RealMatrix m, double tol);

  RealMatrix matrix_;
  double tol_;
  bool irreducible_;
};

/// Reason a matrix fails the stochastic check, or empty when it passes.
std::optional<std::string> stochastic_violation(const RealMatrix& m, double tol);

/// Strong connectivity of the digraph with an edge i -> j whenever m(i,j) > tol.
bool is_irreducible(const RealMatrix& m, double tol = 0.0);

/// Left Perron vector w with w^T A = w^T and sum(w) = 1, for irreducible A.
RealVector stationary_distribution(const StochasticMatrix& a);

}  // namespace afd
