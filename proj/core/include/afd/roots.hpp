#pragma once

// Root engine: primary (polynomial) p-th roots of a matrix, the stochastic
// subset of them, sampled divisibility sets and the digraph period bound.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "afd/numerics.hpp"
#include "afd/stochastic.hpp"

namespace afd {

/// Default refusal threshold for p^s branch enumeration.
inline constexpr std::size_t kEnumerationCap = 4096;

enum class DivisibilityKind {
  all_n,        // every c >= 1
  odd_n,        // every odd c
  finite,       // exactly the listed members
  superset_cp,  // contains every c coprime to cp_modulus
  sampled,      // members observed for c <= c_max, nothing claimed beyond
};

const char* to_string(DivisibilityKind kind) noexcept;

struct DivisibilityReport {
  DivisibilityKind kind = DivisibilityKind::sampled;
  // Explicit members (finite) or observed members (sampled, superset_cp).
  std::vector<int> members;
  int c_max = 0;
  int cp_modulus = 1;
  std::map<int, RealMatrix> witnesses;
  std::optional<int> index_bound;
  bool undetermined = false;
  std::vector<std::string> warnings;

  /// Definite membership when the report decides it, std::nullopt otherwise.
  std::optional<bool> contains(int c) const;
};

/// All p^s primary p-th roots Z diag(L_k) Z^{-1} (branch choice constant on
/// equal eigenvalues). A singular A is accepted only with a semisimple zero
/// eigenvalue, which maps to a zero block.
std::vector<ComplexMatrix> enumerate_polynomial_roots(const ComplexMatrix& a, int p,
                                                      double tol = 0.0,
                                                      std::size_t cap = kEnumerationCap);

/// Stochastic members of the primary c-th roots of A. Only conjugation
/// consistent branch tuples are built, since only those give real matrices.
std::vector<StochasticMatrix> stochastic_roots(const StochasticMatrix& a, int c,
                                               double tol = kStochasticTol,
                                               std::size_t cap = kEnumerationCap);

/// Period of the digraph of an irreducible matrix (gcd of cycle lengths).
int cyclic_index(const StochasticMatrix& a);

/// Members c <= c_max with a stochastic c-th root, one witness each.
DivisibilityReport sample_p_plus(const StochasticMatrix& a, int c_max,
                                 double tol = kStochasticTol);

/// Primary root built from one chosen root value per distinct nonzero
/// eigenvalue of `decomp` (index-aligned with decomp.eigenvalues; entries for
/// the zero eigenvalue are ignored).
ComplexMatrix primary_root(const ComplexMatrix& a, const EigenDecomposition& decomp, int p,
                           const std::vector<Complex>& root_values);

}  // namespace afd
