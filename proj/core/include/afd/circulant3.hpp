#pragma once

// 3x3 circulant stochastic matrices parameterized by the eigenvalue pair
// exp(-s +- i t):
//
//   Gamma(s, t) = (1/3) [[g1, g3, g2], [g2, g1, g3], [g3, g2, g1]]
//
// with g1 = 1 + 2 e^{-s} sin(t + pi/2), g2 = 1 + 2 e^{-s} sin(t - pi/6),
// g3 = 1 + 2 e^{-s} sin(-t - pi/6).

#include <array>

#include "afd/roots.hpp"

namespace afd {

/// Maps an angle to (-pi, pi].
double normalize_angle(double t);

struct CirculantParams {
  double s = 0.0;  // decay, |lambda| = e^{-s}
  double t = 0.0;  // angle in (-pi, pi]

  CirculantParams() = default;
  /// Throws when s < 0 or either value is not finite; t is normalized.
  CirculantParams(double s_, double t_);
};

std::array<double, 3> circulant_gamma(const CirculantParams& p);

/// The matrix Gamma(s, t). Rows sum to one; entries may be negative.
RealMatrix circulant_realize(const CirculantParams& p);

/// psi(s) = -pi/6 + arcsin(e^s / 2); half-width of the nonnegativity
/// intervals for s < log 2.
double circulant_psi(double s);

/// Gamma(s, t) >= 0 iff s >= log 2 or t lies within psi(s) of one of
/// {0, 2pi/3, -2pi/3} (mod 2pi).
bool circulant_is_nonneg(const CirculantParams& p);

/// min(g1, g2, g3); its sign is the nonnegativity verdict, its magnitude the
/// distance from the region boundary used for "boundary" reporting.
double circulant_nonneg_margin(const CirculantParams& p);

/// floor / ceil of (c alpha - t0) / (2 pi).
long circulant_k_floor(double alpha, int c, double t0);
long circulant_k_ceil(double alpha, int c, double t0);

/// Parameters of the real circulant c-th root B(c, k) = Gamma(s0/c, (t0 + 2 pi k)/c).
CirculantParams circulant_root(const CirculantParams& p0, int c, long k);

struct CirculantClassification {
  DivisibilityReport report;
  bool i3_limit = false;
  bool c3_sufficient = false;
  bool c3sq_sufficient = false;
  // Per-flag margins: s0 - sqrt(3)|t0 - alpha| for alpha = 0, -2pi/3, 2pi/3.
  double i3_margin = 0.0;
  double c3_margin = 0.0;
  double c3sq_margin = 0.0;
  bool boundary = false;
};

/// Margin s0 - sqrt(3) |t0 - alpha| with the angle difference reduced mod 2pi.
double circulant_limit_margin(const CirculantParams& p0, double alpha);

/// Limit flags and divisibility. Outside the three sufficient regions the
/// report is sampled over the real circulant roots B(c, k), c <= c_max, and
/// marked undetermined. Throws ErrorKind::not_stochastic when Gamma(s0, t0)
/// has a negative entry.
CirculantClassification circulant_classify(const CirculantParams& p0, int c_max = 12);

/// Members c <= c_max for which some B(c, k), 0 <= k < c, is stochastic.
DivisibilityReport circulant_sample_p_plus(const CirculantParams& p0, int c_max,
                                           double tol = kStochasticTol);

/// True when every row is the cyclic right shift of the previous one.
bool is_circulant3(const RealMatrix& a, double tol);

/// Reads (s, t) from a nonsingular 3x3 circulant stochastic matrix using the
/// eigenvalue a + b e^{-2 pi i/3} + c e^{2 pi i/3} of first row (a, b, c).
CirculantParams circulant_from_matrix(const StochasticMatrix& a);

}  // namespace afd
