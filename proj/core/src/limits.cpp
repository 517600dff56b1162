#include "afd/limits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "afd/embed.hpp"

namespace afd {

namespace {

// Orthonormal basis of the column span of a full-column-rank block.
ComplexMatrix orthonormal_columns(const ComplexMatrix& b) {
  Eigen::HouseholderQR<ComplexMatrix> qr(b);
  return qr.householderQ() * ComplexMatrix::Identity(b.rows(), b.cols());
}

int rank_with_gap(const ComplexMatrix& m, double cutoff) {
  const Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  int rank = 0;
  double above = std::numeric_limits<double>::infinity();
  double below = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) {
      ++rank;
      above = std::min(above, sv(i));
    } else {
      below = std::max(below, sv(i));
    }
  }
  if (std::isfinite(above) && above - below < 10.0 * cutoff) {
    std::ostringstream os;
    os << "intersection rank is ambiguous: singular values " << above << " and " << below
       << " straddle the cutoff " << cutoff;
    throw Error(ErrorKind::ill_conditioned, os.str());
  }
  return rank;
}

struct Spaces {
  std::vector<Complex> labels;
  std::vector<int> multiplicities;
  std::vector<ComplexMatrix> bases;
};

Spaces nonzero_spaces(const ComplexMatrix& a) {
  const EigenDecomposition d = spectrum(a);
  Spaces s;
  for (std::size_t k = 0; k < d.distinct_count(); ++k) {
    if (d.eigenvalues[k] == Complex(0.0, 0.0)) continue;
    s.labels.push_back(d.eigenvalues[k]);
    s.multiplicities.push_back(d.multiplicities[k]);
    s.bases.push_back(orthonormal_columns(d.right_block(k)));
  }
  return s;
}

int find_label(const std::vector<Complex>& labels, Complex z, double radius) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (std::abs(labels[i] - z) <= radius) return static_cast<int>(i);
  }
  return -1;
}

std::string label_text(Complex z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
  return os.str();
}

int parity_entry(const RearrangementMatrix& m, int row, Complex nu) {
  const int col = m.col_index(nu);
  return col < 0 ? 0 : m.entries(row, col);
}

}  // namespace

int RearrangementMatrix::row_index(Complex z, double radius) const {
  return find_label(row_labels, z, radius);
}

int RearrangementMatrix::col_index(Complex z, double radius) const {
  return find_label(col_labels, z, radius);
}

RearrangementMatrix rearrangement_matrix(const ComplexMatrix& a, const ComplexMatrix& l,
                                         double cutoff) {
  require_square(a, "rearrangement_matrix");
  require_square(l, "rearrangement_matrix");
  if (a.rows() != l.rows()) {
    throw Error(ErrorKind::invalid_argument, "rearrangement_matrix: dimension mismatch");
  }
  const Spaces sa = nonzero_spaces(a);
  const Spaces sl = nonzero_spaces(l);
  RearrangementMatrix m;
  m.row_labels = sa.labels;
  m.col_labels = sl.labels;
  m.row_multiplicities = sa.multiplicities;
  m.col_multiplicities = sl.multiplicities;
  m.entries = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(sa.labels.size()),
                                    static_cast<Eigen::Index>(sl.labels.size()));
  for (std::size_t i = 0; i < sa.labels.size(); ++i) {
    for (std::size_t j = 0; j < sl.labels.size(); ++j) {
      const ComplexMatrix& u = sa.bases[i];
      const ComplexMatrix& v = sl.bases[j];
      ComplexMatrix stacked(u.rows(), u.cols() + v.cols());
      stacked << u, v;
      const int dim = static_cast<int>(u.cols() + v.cols()) - rank_with_gap(stacked, cutoff);
      m.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = dim;
    }
  }
  return m;
}

std::vector<std::string> validate_rearrangement(const RearrangementMatrix& m,
                                                const ComplexMatrix& a, const ComplexMatrix& l,
                                                RootParity parity) {
  std::vector<std::string> out;
  const Eigen::Index rows = m.entries.rows();
  const Eigen::Index cols = m.entries.cols();
  if (rows != static_cast<Eigen::Index>(m.row_labels.size()) ||
      cols != static_cast<Eigen::Index>(m.col_labels.size())) {
    out.push_back("entry matrix shape does not match the labels");
    return out;
  }
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (m.entries(i, j) < 0) out.push_back("negative entry");
    }
  }

  const EigenDecomposition da = spectrum(a);
  const EigenDecomposition dl = spectrum(l);
  auto mult = [](const EigenDecomposition& d, Complex z) {
    const int k = d.find(z, std::max(d.tolerance, 1e-8));
    return k < 0 ? 0 : d.multiplicities[static_cast<std::size_t>(k)];
  };
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Complex lambda = m.row_labels[static_cast<std::size_t>(i)];
    const int expected = mult(da, lambda);
    if (m.entries.row(i).sum() != expected) {
      std::ostringstream os;
      os << "row " << label_text(lambda) << " sums to " << m.entries.row(i).sum()
         << " but mult(lambda, A) = " << expected;
      out.push_back(os.str());
    }
  }
  for (Eigen::Index j = 0; j < cols; ++j) {
    const Complex nu = m.col_labels[static_cast<std::size_t>(j)];
    const int expected = mult(dl, nu);
    if (m.entries.col(j).sum() != expected) {
      std::ostringstream os;
      os << "column " << label_text(nu) << " sums to " << m.entries.col(j).sum()
         << " but mult(nu, L) = " << expected;
      out.push_back(os.str());
    }
  }

  const bool real_pair = max_imag(a) <= 1e-12 && max_imag(l) <= 1e-12;
  if (real_pair) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = 0; j < cols; ++j) {
        const Complex lambda = m.row_labels[static_cast<std::size_t>(i)];
        const Complex nu = m.col_labels[static_cast<std::size_t>(j)];
        const int ci = m.row_index(std::conj(lambda));
        const int cj = m.col_index(std::conj(nu));
        if (ci < 0 || cj < 0) {
          out.push_back("conjugate label missing for " + label_text(lambda) + ", " +
                        label_text(nu));
        } else if (m.entries(i, j) != m.entries(ci, cj)) {
          out.push_back("conjugation symmetry fails at " + label_text(lambda) + ", " +
                        label_text(nu));
        }
      }
    }

    const RealMatrix ar = a.real();
    const auto sa = StochasticMatrix::try_from(ar);
    if (sa && sa->irreducible()) {
      const bool first_is_one = rows > 0 && cols > 0 &&
                                std::abs(m.row_labels.front() - 1.0) <= 1e-8 &&
                                std::abs(m.col_labels.front() - 1.0) <= 1e-8;
      if (!first_is_one) {
        out.push_back("first row and column must be labeled by eigenvalue 1");
      } else {
        if (m.entries(0, 0) != 1) out.push_back("M[1,1] must equal 1");
        for (Eigen::Index j = 1; j < cols; ++j) {
          if (m.entries(0, j) != 0) out.push_back("M[1,nu] must vanish for nu != 1");
        }
      }
    }

    if (parity != RootParity::unknown) {
      for (Eigen::Index i = 0; i < rows; ++i) {
        const Complex z = m.row_labels[static_cast<std::size_t>(i)];
        if (std::abs(z.imag()) > 1e-12) continue;
        const int row = static_cast<int>(i);
        const int plus = parity_entry(m, row, 1.0);
        const int minus = parity_entry(m, row, -1.0);
        const std::string name = label_text(z);
        if (parity == RootParity::even && z.real() < 0.0) {
          if (plus % 2 != 0) out.push_back("even roots need M[" + name + ",1] even");
          if (minus % 2 != 0) out.push_back("even roots need M[" + name + ",-1] even");
        }
        if (parity == RootParity::odd) {
          if (z.real() > 0.0 && minus % 2 != 0) {
            out.push_back("odd roots need M[" + name + ",-1] even");
          }
          if (z.real() < 0.0 && plus % 2 != 0) {
            out.push_back("odd roots need M[" + name + ",1] even");
          }
        }
      }
    }
  }
  return out;
}

LimitCandidate make_limit_candidate(const std::vector<int>& parts) {
  if (parts.empty()) throw Error(ErrorKind::invalid_argument, "empty partition");
  LimitCandidate c;
  c.partition = parts;
  RealMatrix r(0, 0);
  for (int part : parts) {
    if (part < 1) throw Error(ErrorKind::invalid_argument, "partition parts must be positive");
    r = direct_sum(r, cycle_matrix(part));
    c.l0 = std::lcm(c.l0, part);
  }
  c.realization = r;
  return c;
}

std::vector<LimitCandidate> limit_candidates(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "limit_candidates: n must be >= 1");
  std::vector<LimitCandidate> out;
  std::vector<int> parts;
  // Depth-first over nonincreasing parts, largest first.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(make_limit_candidate(parts));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

StochasticMatrix construct_afd(const LimitCandidate& l, const RealMatrix& q) {
  if (q.rows() != l.realization.rows() || q.cols() != l.realization.cols()) {
    throw Error(ErrorKind::invalid_argument, "construct_afd: dimension mismatch");
  }
  if (!is_generator(q, kGeneratorRowSumTol)) {
    throw Error(ErrorKind::not_generator, "construct_afd: Q is not a generator");
  }
  const RealMatrix& lm = l.realization;
  if (inf_norm(RealMatrix(lm * q - q * lm)) > 1e-10) {
    throw Error(ErrorKind::not_commuting, "construct_afd: Q does not commute with L");
  }
  return StochasticMatrix::from(RealMatrix(lm * matrix_exp(q)));
}

RealMatrix construct_afd_witness(const LimitCandidate& l, const RealMatrix& q, int k) {
  if (k < 0) throw Error(ErrorKind::invalid_argument, "construct_afd_witness: k must be >= 0");
  const double order = static_cast<double>(k) * l.l0 + 1.0;
  return l.realization * matrix_exp(RealMatrix(q / order));
}

std::optional<PermutationMatch> match_limit_candidate(const RealMatrix& m, double radius) {
  const int n = static_cast<int>(m.rows());
  if (n > 6) {
    throw Error(ErrorKind::unsupported, "permutation matching is limited to n <= 6");
  }
  std::optional<PermutationMatch> best;
  for (const auto& cand : limit_candidates(n)) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      double dist = 0.0;
      for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += std::abs(m(i, j) - cand.realization(perm[i], perm[j]));
        dist = std::max(dist, row);
      }
      if (dist <= radius && (!best || dist < best->distance)) {
        best = PermutationMatch{cand.partition, perm, dist};
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return best;
}

std::vector<AccumulationPoint> accumulation_points(
    const std::vector<std::pair<int, StochasticMatrix>>& roots, double radius) {
  std::vector<AccumulationPoint> clusters;
  if (roots.empty()) return clusters;
  for (const auto& [c, root] : roots) {
    int nearest = -1;
    double nearest_dist = radius;
    for (std::size_t k = 0; k < clusters.size(); ++k) {
      const double d = inf_norm(RealMatrix(root.matrix() - clusters[k].center));
      if (d <= nearest_dist) {
        nearest = static_cast<int>(k);
        nearest_dist = d;
      }
    }
    if (nearest < 0) {
      AccumulationPoint p;
      p.center = root.matrix();
      p.members = 1;
      p.first_c = p.last_c = c;
      clusters.push_back(std::move(p));
    } else {
      auto& p = clusters[static_cast<std::size_t>(nearest)];
      p.center = root.matrix();
      ++p.members;
      p.last_c = c;
    }
  }

  const int c_lo = roots.front().first;
  const int c_hi = roots.back().first;
  const double tail_start = c_lo + 0.75 * (c_hi - c_lo);
  for (auto& p : clusters) {
    p.empirical = p.members >= 2 && p.last_c >= tail_start;
    const auto n = p.center.rows();
    if (n > 6) continue;
    const double cutoff = 1e-8 * std::max(1.0, inf_norm(p.center));
    if (numerical_rank(p.center.cast<Complex>(), cutoff) < n) continue;
    if (auto match = match_limit_candidate(p.center, radius)) {
      p.matched_partition = match->partition;
      p.permutation = match->permutation;
      p.match_distance = match->distance;
    }
  }
  return clusters;
}

}  // namespace afd
