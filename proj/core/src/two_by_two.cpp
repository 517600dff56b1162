#include "afd/two_by_two.hpp"

#include <cmath>
#include <sstream>

namespace afd {

TwoByTwoParams::TwoByTwoParams(double s_, double t_) : s(s_), t(t_) {
  if (!(s >= 0.0 && s < 1.0 && t >= 0.0 && t < 1.0)) {
    std::ostringstream os;
    os << "2x2 parameters must lie in [0,1), got s=" << s << " t=" << t;
    throw Error(ErrorKind::invalid_argument, os.str());
  }
}

TwoByTwoParams TwoByTwoParams::from_matrix(const StochasticMatrix& a) {
  if (a.size() != 2) throw Error(ErrorKind::invalid_argument, "expected a 2x2 matrix");
  return TwoByTwoParams(a(1, 1), a(0, 0));
}

StochasticMatrix two_by_two_build(const TwoByTwoParams& p) {
  RealMatrix a(2, 2);
  a << p.t, 1.0 - p.t, 1.0 - p.s, p.s;
  return StochasticMatrix::from(a);
}

ComplexMatrix two_by_two_root(const TwoByTwoParams& p, Complex mu) {
  const double denom = 2.0 - p.s - p.t;
  if (denom == 0.0) {
    throw Error(ErrorKind::invalid_argument, "two_by_two_root: s + t = 2 is degenerate");
  }
  const double us = 1.0 - p.s;
  const double ut = 1.0 - p.t;
  ComplexMatrix b(2, 2);
  b << us + ut * mu, ut * (1.0 - mu), us * (1.0 - mu), ut + us * mu;
  return b / denom;
}

double two_by_two_odd_bound(const TwoByTwoParams& p) {
  const double gap = std::abs(std::log1p(-p.s) - std::log1p(-p.t));
  if (gap == 0.0) return std::numeric_limits<double>::infinity();
  return std::abs(std::log(std::abs(p.lambda()))) / gap;
}

TwoByTwoClassification two_by_two_classify(const TwoByTwoParams& p) {
  TwoByTwoClassification out;
  const double lambda = p.lambda();
  const bool symmetric = std::abs(p.s - p.t) <= kBoundaryTol;
  const RealMatrix id = RealMatrix::Identity(2, 2);
  const RealMatrix swap = cycle_matrix(2);
  out.boundary = std::abs(lambda) <= kBoundaryTol || symmetric;

  if (std::abs(lambda) <= kBoundaryTol) {
    out.singular = true;
    out.report.kind = DivisibilityKind::all_n;
    out.limits.push_back(two_by_two_build(p).matrix());
    return out;
  }
  if (lambda > 0.0) {
    out.report.kind = DivisibilityKind::all_n;
    out.limits.push_back(id);
    if (symmetric) out.limits.push_back(swap);
    out.odd_bound = two_by_two_odd_bound(p);
    return out;
  }
  if (symmetric) {
    out.report.kind = DivisibilityKind::odd_n;
    out.limits.push_back(swap);
    return out;
  }

  const double b = two_by_two_odd_bound(p);
  out.odd_bound = b;
  out.report.kind = DivisibilityKind::finite;
  out.report.members.push_back(1);
  out.report.witnesses.emplace(1, two_by_two_build(p).matrix());
  for (int c = 3; c <= b + kBoundaryTol * std::max(1.0, b); c += 2) {
    out.report.members.push_back(c);
    const double mu = -std::pow(-lambda, 1.0 / c);
    out.report.witnesses.emplace(c, RealMatrix(two_by_two_root(p, mu).real()));
  }
  for (int c = 1; c <= b + 2.0; c += 2) {
    if (std::abs(c - b) <= kBoundaryTol * std::max(1.0, b)) out.boundary = true;
  }
  out.report.c_max = out.report.members.back();
  return out;
}

}  // namespace afd
