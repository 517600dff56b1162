#pragma once

// Analysis report assembly: family detection, the matching classifier, and
// the generic fallback (sampling, generator extraction, limit certificates).

#include <string>
#include <vector>

#include "afd/cli/json_out.hpp"
#include "afd/roots.hpp"

namespace afd::cli {

/// "2x2", "circulant-3", "rank-2" or "generic".
std::string detect_family(const StochasticMatrix& a);

/// A permutation matrix L commuting with A such that L^{-1} A has a
/// generator, which makes L a limit and CP(l0) a subset of P+(A).
struct CertifiedLimit {
  RealMatrix limit;
  std::vector<int> cycle_type;  // nonincreasing
  int l0 = 1;
  RealMatrix generator;
};

/// Exhaustive over permutations for n <= 6; empty beyond.
std::vector<CertifiedLimit> certify_permutation_limits(const StochasticMatrix& a, double tol);

Json spectrum_json(const StochasticMatrix& a);

Json analyze_report(const StochasticMatrix& a, int c_max);

}  // namespace afd::cli
