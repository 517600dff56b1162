#pragma once

// Embeddability certificates: generator validity, extraction of a generator
// through the principal logarithm, and the inverse M-matrix test.

#include <optional>
#include <string>

#include "afd/stochastic.hpp"

namespace afd {

/// Row-sum tolerance for a generator.
inline constexpr double kGeneratorRowSumTol = 1e-10;
/// Off-diagonal entries down to minus this value are accepted as zero.
inline constexpr double kGeneratorOffDiagTol = 1e-12;

/// Row sums zero and off-diagonal entries >= -tol. Throws
/// ErrorKind::invalid_argument when an imaginary part exceeds tol.
bool is_generator(const ComplexMatrix& q, double tol);
bool is_generator(const RealMatrix& q, double tol);

enum class GeneratorRejection {
  none,
  nonpositive_real_eigenvalue,  // principal log undefined
  negative_off_diagonal,        // log exists but is not a generator
};

const char* to_string(GeneratorRejection r) noexcept;

struct GeneratorResult {
  std::optional<RealMatrix> generator;
  GeneratorRejection rejection = GeneratorRejection::none;
  std::string detail;
  // Principal logarithm when it exists (also on rejection for negative entries).
  std::optional<RealMatrix> log;

  bool ok() const { return generator.has_value(); }
};

/// Principal logarithm of A accepted as a generator at `tol`. Throws
/// ErrorKind::singular for singular A.
GeneratorResult extract_generator(const StochasticMatrix& a, double tol = kStochasticTol);

/// A^{-1} has off-diagonal entries <= tol and all its eigenvalues have
/// positive real part. Throws ErrorKind::singular for singular A.
bool is_inverse_M_matrix(const StochasticMatrix& a, double tol = kStochasticTol);

}  // namespace afd
