#include "afd/circulant3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "afd/two_by_two.hpp"

namespace afd {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kThirdTurn = 2.0 * std::numbers::pi / 3.0;
const double kSqrt3 = std::sqrt(3.0);

// |t - alpha| reduced to [0, pi].
double angular_distance(double t, double alpha) {
  return std::abs(std::remainder(t - alpha, kTwoPi));
}

}  // namespace

double normalize_angle(double t) {
  double r = std::remainder(t, kTwoPi);  // [-pi, pi]
  if (r <= -kPi) r += kTwoPi;
  return r;
}

CirculantParams::CirculantParams(double s_, double t_) : s(s_), t(0.0) {
  if (!std::isfinite(s_) || !std::isfinite(t_) || s_ < 0.0) {
    std::ostringstream os;
    os << "circulant parameters require finite s >= 0, got s=" << s_ << " t=" << t_;
    throw Error(ErrorKind::invalid_argument, os.str());
  }
  t = normalize_angle(t_);
}

std::array<double, 3> circulant_gamma(const CirculantParams& p) {
  const double r = 2.0 * std::exp(-p.s);
  // g1 uses sin(t + pi/2) = cos(t) so that t = 0 gives exactly 1 + r.
  return {1.0 + r * std::cos(p.t), 1.0 + r * std::sin(p.t - kPi / 6.0),
          1.0 + r * std::sin(-p.t - kPi / 6.0)};
}

RealMatrix circulant_realize(const CirculantParams& p) {
  const auto [g1, g2, g3] = circulant_gamma(p);
  RealMatrix m(3, 3);
  m << g1, g3, g2,
       g2, g1, g3,
       g3, g2, g1;
  return m / 3.0;
}

double circulant_psi(double s) {
  const double x = std::exp(s) / 2.0;
  if (x >= 1.0) return kPi / 3.0;
  return -kPi / 6.0 + std::asin(x);
}

bool circulant_is_nonneg(const CirculantParams& p) {
  if (p.s >= std::log(2.0)) return true;
  const double psi = circulant_psi(p.s);
  for (double alpha : {0.0, kThirdTurn, -kThirdTurn}) {
    if (angular_distance(p.t, alpha) <= psi) return true;
  }
  return false;
}

double circulant_nonneg_margin(const CirculantParams& p) {
  const auto g = circulant_gamma(p);
  return *std::min_element(g.begin(), g.end());
}

long circulant_k_floor(double alpha, int c, double t0) {
  return static_cast<long>(std::floor((c * alpha - t0) / kTwoPi));
}

long circulant_k_ceil(double alpha, int c, double t0) {
  return static_cast<long>(std::ceil((c * alpha - t0) / kTwoPi));
}

CirculantParams circulant_root(const CirculantParams& p0, int c, long k) {
  if (c < 1) throw Error(ErrorKind::invalid_argument, "circulant_root: c must be >= 1");
  return CirculantParams(p0.s / c, (p0.t + kTwoPi * static_cast<double>(k)) / c);
}

double circulant_limit_margin(const CirculantParams& p0, double alpha) {
  return p0.s - kSqrt3 * angular_distance(p0.t, alpha);
}

DivisibilityReport circulant_sample_p_plus(const CirculantParams& p0, int c_max, double tol) {
  if (c_max < 1) throw Error(ErrorKind::invalid_argument, "c_max must be >= 1");
  DivisibilityReport report;
  report.kind = DivisibilityKind::sampled;
  report.c_max = c_max;
  const RealMatrix a = circulant_realize(p0);
  if (is_irreducible(a, tol)) {
    report.index_bound = cyclic_index(StochasticMatrix::from(a, tol));
  }
  for (int c = 1; c <= c_max; ++c) {
    for (long k = 0; k < c; ++k) {
      auto root = StochasticMatrix::try_from(circulant_realize(circulant_root(p0, c, k)), tol);
      if (!root) continue;
      report.members.push_back(c);
      report.witnesses.emplace(c, root->matrix());
      break;
    }
  }
  return report;
}

CirculantClassification circulant_classify(const CirculantParams& p0, int c_max) {
  const double nonneg_margin = circulant_nonneg_margin(p0);
  if (!circulant_is_nonneg(p0) && nonneg_margin < -kBoundaryTol) {
    std::ostringstream os;
    os << "Gamma(" << p0.s << ", " << p0.t << ") has a negative entry";
    throw Error(ErrorKind::not_stochastic, os.str());
  }
  CirculantClassification out;
  out.i3_margin = circulant_limit_margin(p0, 0.0);
  out.c3_margin = circulant_limit_margin(p0, -kThirdTurn);
  out.c3sq_margin = circulant_limit_margin(p0, kThirdTurn);
  out.boundary = std::abs(nonneg_margin) <= kBoundaryTol ||
                 std::abs(out.i3_margin) <= kBoundaryTol ||
                 std::abs(out.c3_margin) <= kBoundaryTol ||
                 std::abs(out.c3sq_margin) <= kBoundaryTol;

  if (out.i3_margin >= -kBoundaryTol) {
    out.i3_limit = out.c3_sufficient = out.c3sq_sufficient = true;
    out.report.kind = DivisibilityKind::all_n;
    return out;
  }
  out.c3_sufficient = out.c3_margin >= -kBoundaryTol;
  out.c3sq_sufficient = out.c3sq_margin >= -kBoundaryTol;
  out.report = circulant_sample_p_plus(p0, c_max);
  if (out.c3_sufficient || out.c3sq_sufficient) {
    out.report.kind = DivisibilityKind::superset_cp;
    out.report.cp_modulus = 3;
  } else {
    out.report.undetermined = true;
  }
  return out;
}

bool is_circulant3(const RealMatrix& a, double tol) {
  if (a.rows() != 3 || a.cols() != 3) return false;
  for (int i = 1; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (std::abs(a(i, j) - a(0, (j - i + 3) % 3)) > tol) return false;
    }
  }
  return true;
}

CirculantParams circulant_from_matrix(const StochasticMatrix& a) {
  const double tol = std::max(a.tol(), 1e-12);
  if (!is_circulant3(a.matrix(), tol)) {
    throw Error(ErrorKind::not_circulant, "circulant_from_matrix: matrix is not a 3x3 circulant");
  }
  const Complex omega = std::polar(1.0, kThirdTurn);
  const Complex lambda = a(0, 0) + a(0, 1) * std::conj(omega) + a(0, 2) * omega;
  if (std::abs(lambda) <= tol) {
    throw Error(ErrorKind::singular, "circulant_from_matrix: singular circulant (s is infinite)");
  }
  const double s = std::max(0.0, -std::log(std::abs(lambda)));
  double t = std::atan2(lambda.imag(), lambda.real());
  if (std::abs(lambda.imag()) <= 1e-15 && lambda.real() < 0.0) t = kPi;
  return CirculantParams(s, t);
}

}  // namespace afd
