#include "afd/rank_two.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace afd {

namespace {

// Tolerance for matching rows and proportional blocks.
constexpr double kMatchTol = 1e-8;
constexpr double kAlphaTol = 1e-8;

void require_probability(const RealVector& x, const char* name) {
  if (x.size() == 0) {
    throw Error(ErrorKind::invalid_argument, std::string(name) + " must be nonempty");
  }
  if (x.minCoeff() <= 0.0 || std::abs(x.sum() - 1.0) > 1e-10) {
    throw Error(ErrorKind::invalid_argument,
                std::string(name) + " must be entrywise positive and sum to one");
  }
}

RealMatrix block_form(const RealVector& w, const RealVector& v, double alpha, double mu) {
  const int n1 = static_cast<int>(w.size());
  const int n2 = static_cast<int>(v.size());
  RealMatrix m(n1 + n2, n1 + n2);
  const RealVector one1 = RealVector::Ones(n1);
  const RealVector one2 = RealVector::Ones(n2);
  m.topLeftCorner(n1, n1) = (alpha + mu) * one1 * w.transpose();
  m.topRightCorner(n1, n2) = (1.0 - mu) * one1 * v.transpose();
  m.bottomLeftCorner(n2, n1) = alpha * (1.0 - mu) * one2 * w.transpose();
  m.bottomRightCorner(n2, n2) = (1.0 + alpha * mu) * one2 * v.transpose();
  return m / (1.0 + alpha);
}

}  // namespace

RankTwoParams::RankTwoParams(RealVector w_, RealVector v_, double alpha_, double lambda_)
    : w(std::move(w_)), v(std::move(v_)), alpha(alpha_), lambda(lambda_) {
  require_probability(w, "w");
  require_probability(v, "v");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorKind::invalid_argument, "alpha must be positive");
  }
  if (!(lambda > -1.0 && lambda < 1.0) || lambda == 0.0) {
    throw Error(ErrorKind::invalid_argument, "lambda must be a nonzero real in (-1, 1)");
  }
}

bool RankTwoParams::admissible(double tol) const {
  if (lambda > 0.0) return alpha > 0.0;
  return std::abs(alpha - 1.0) <= tol;
}

double rank_two_mu_min(double alpha) { return std::max(-alpha, -1.0 / alpha); }

StochasticMatrix rank_two_build(const RankTwoParams& p) {
  if (!p.admissible()) {
    std::ostringstream os;
    os << "rank-two parameters need lambda > 0 or alpha = 1, got alpha=" << p.alpha
       << " lambda=" << p.lambda;
    throw Error(ErrorKind::invalid_argument, os.str());
  }
  return StochasticMatrix::from(block_form(p.w, p.v, p.alpha, p.lambda));
}

ComplexMatrix rank_two_root(const RankTwoParams& p, double mu) {
  return block_form(p.w, p.v, p.alpha, mu).cast<Complex>();
}

bool has_rank_two(const RealMatrix& a) {
  if (a.rows() < 2) return false;
  const Eigen::JacobiSVD<RealMatrix> svd(a);
  const auto& sv = svd.singularValues();
  const double cutoff = kRankTwoRelTol * std::max(1.0, inf_norm(a));
  if (sv(1) <= cutoff) return false;
  return sv.size() < 3 || sv(2) <= cutoff;
}

RankTwoClassification rank_two_classify(const StochasticMatrix& a, int c_max) {
  const RealMatrix& m = a.matrix();
  const int n = a.size();
  if (!has_rank_two(m)) throw Error(ErrorKind::rank_mismatch, "rank_two_classify: rank is not 2");
  if (!a.irreducible()) throw Error(ErrorKind::reducible, "rank_two_classify: reducible input");

  RankTwoClassification out;
  auto reject = [&](std::string reason, bool theorem_applies) {
    out.rejection = std::move(reason);
    out.report = sample_p_plus(a, c_max, a.tol());
    // Outside the block form the root set is finite; beyond the parameter
    // range nothing is claimed and the sample stands alone.
    if (theorem_applies) {
      out.report.kind = DivisibilityKind::finite;
    } else {
      out.report.undetermined = true;
    }
    return out;
  };

  // Row types: the rows equal to row 0 form block one.
  std::vector<int> block1, block2;
  int rep2 = -1;
  for (int i = 0; i < n; ++i) {
    if ((m.row(i) - m.row(0)).lpNorm<Eigen::Infinity>() <= kMatchTol) {
      block1.push_back(i);
    } else if (rep2 < 0 || (m.row(i) - m.row(rep2)).lpNorm<Eigen::Infinity>() <= kMatchTol) {
      if (rep2 < 0) rep2 = i;
      block2.push_back(i);
    } else {
      return reject("more than two distinct row types", true);
    }
  }
  if (rep2 < 0) return reject("all rows equal", true);

  auto gather = [&](int row, const std::vector<int>& cols) {
    RealVector x(static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) x(static_cast<Eigen::Index>(j)) = m(row, cols[j]);
    return x;
  };
  const RealVector r1_i1 = gather(block1.front(), block1);
  const RealVector r2_i1 = gather(rep2, block1);
  const RealVector r1_i2 = gather(block1.front(), block2);
  const RealVector r2_i2 = gather(rep2, block2);
  const double x1 = r1_i1.sum(), x2 = r2_i1.sum(), y1 = r1_i2.sum(), y2 = r2_i2.sum();

  // w from the heavier of the two restrictions to block one, v likewise.
  const RealVector w = (x1 >= x2 ? r1_i1 / x1 : r2_i1 / x2);
  const RealVector v = (y2 >= y1 ? r2_i2 / y2 : r1_i2 / y1);
  const double scale = kMatchTol * std::max(1.0, inf_norm(m));
  if ((r1_i1 - x1 * w).lpNorm<Eigen::Infinity>() > scale ||
      (r2_i1 - x2 * w).lpNorm<Eigen::Infinity>() > scale ||
      (r1_i2 - y1 * v).lpNorm<Eigen::Infinity>() > scale ||
      (r2_i2 - y2 * v).lpNorm<Eigen::Infinity>() > scale) {
    return reject("row blocks are not proportional to common w, v", true);
  }

  const double lambda = x1 - x2;
  const double alpha = x2 / y1;
  out.order = block1;
  out.order.insert(out.order.end(), block2.begin(), block2.end());

  if (!(lambda > -1.0 && lambda < 1.0) || std::abs(lambda) <= kMatchTol) {
    std::ostringstream os;
    os << "spectral parameter lambda=" << lambda << " outside (-1, 1) \\ {0}";
    return reject(os.str(), false);
  }
  RankTwoParams params(w / w.sum(), v / v.sum(), alpha, lambda);
  if (lambda < 0.0 && std::abs(alpha - 1.0) > kAlphaTol) {
    std::ostringstream os;
    os << "lambda=" << lambda << " < 0 with alpha=" << alpha << " != 1";
    return reject(os.str(), true);
  }
  if (lambda < 0.0) params.alpha = 1.0;
  out.params = params;

  // Witnesses in the original ordering.
  DivisibilityReport& report = out.report;
  report.kind = lambda > 0.0 ? DivisibilityKind::all_n : DivisibilityKind::odd_n;
  report.c_max = c_max;
  report.index_bound = cyclic_index(a);
  for (int c = 1; c <= c_max; ++c) {
    if (lambda < 0.0 && c % 2 == 0) continue;
    const double mu = (lambda > 0.0 ? 1.0 : -1.0) * std::pow(std::abs(lambda), 1.0 / c);
    const RealMatrix b = block_form(params.w, params.v, params.alpha, mu);
    RealMatrix root(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) root(out.order[i], out.order[j]) = b(i, j);
    }
    report.members.push_back(c);
    report.witnesses.emplace(c, root);
  }
  return out;
}

}  // namespace afd
