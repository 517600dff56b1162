#include "afd/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace afd {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::not_square: return "not_square";
    case ErrorKind::not_converged: return "not_converged";
    case ErrorKind::singular: return "singular";
    case ErrorKind::no_principal_log: return "no_principal_log";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::enumeration_cap: return "enumeration_cap";
    case ErrorKind::ill_conditioned: return "ill_conditioned";
    case ErrorKind::not_stochastic: return "not_stochastic";
    case ErrorKind::reducible: return "reducible";
    case ErrorKind::not_circulant: return "not_circulant";
    case ErrorKind::rank_mismatch: return "rank_mismatch";
    case ErrorKind::not_generator: return "not_generator";
    case ErrorKind::not_commuting: return "not_commuting";
  }
  return "unknown";
}

RootBranch::RootBranch(int order, int index) : p(order), j(index) {
  if (order < 1 || index < 0 || index >= order) {
    std::ostringstream os;
    os << "root branch requires 0 <= j < p, got p=" << order << " j=" << index;
    throw Error(ErrorKind::invalid_argument, os.str());
  }
}

double inf_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

double inf_norm(const RealMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

double max_imag(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.imag().cwiseAbs().maxCoeff();
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << a.rows() << "x"
       << a.cols();
    throw Error(ErrorKind::not_square, os.str());
  }
  if (!a.allFinite()) {
    throw Error(ErrorKind::invalid_argument, std::string(what) + ": non-finite entry");
  }
}

int numerical_rank(const ComplexMatrix& a, double cutoff) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  return rank;
}

namespace {

// Real numbers first (decreasing), then complex values by decreasing real part,
// increasing |Im|, positive imaginary part before its conjugate.
bool eigen_order(Complex a, Complex b) {
  const bool ra = a.imag() == 0.0;
  const bool rb = b.imag() == 0.0;
  if (ra != rb) return ra;
  if (ra) return a.real() > b.real();
  if (a.real() != b.real()) return a.real() > b.real();
  if (std::abs(a.imag()) != std::abs(b.imag())) return std::abs(a.imag()) < std::abs(b.imag());
  return a.imag() > b.imag();
}

// Block sizes (largest first) from nullities of (A - lambda I)^k, k = 1..m.
std::vector<int> blocks_from_nullities(std::vector<int> nullity, int m) {
  // nullity[0] corresponds to k = 0 and is zero.
  for (std::size_t k = 1; k < nullity.size(); ++k) {
    nullity[k] = std::clamp(nullity[k], nullity[k - 1], m);
  }
  nullity.back() = m;
  std::vector<int> at_least;  // number of blocks of size >= k
  for (std::size_t k = 1; k < nullity.size(); ++k) {
    const int g = nullity[k] - nullity[k - 1];
    if (g > 0) at_least.push_back(g);
  }
  // A valid rank sequence gives a non-increasing profile; rounding noise can
  // break that, in which case the sorted profile is the closest partition.
  std::sort(at_least.begin(), at_least.end(), std::greater<>());
  std::vector<int> blocks;
  if (at_least.empty()) return blocks;
  for (int b = 0; b < at_least.front(); ++b) {
    int size = 0;
    for (int g : at_least) {
      if (g > b) ++size;
    }
    blocks.push_back(size);
  }
  std::sort(blocks.begin(), blocks.end(), std::greater<>());
  return blocks;
}

}  // namespace

int EigenDecomposition::find(Complex z, double radius) const {
  int best = -1;
  double best_d = radius;
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
    const double d = std::abs(eigenvalues[k] - z);
    if (d <= best_d) {
      best = static_cast<int>(k);
      best_d = d;
    }
  }
  return best;
}

ComplexMatrix EigenDecomposition::right_block(std::size_t k) const {
  return right_basis.middleCols(offsets[k], multiplicities[k]);
}

ComplexMatrix EigenDecomposition::left_block(std::size_t k) const {
  return left_basis.middleRows(offsets[k], multiplicities[k]);
}

ComplexMatrix EigenDecomposition::restrict(const ComplexMatrix& a, std::size_t k) const {
  return left_block(k) * a * right_block(k);
}

bool EigenDecomposition::diagonalizable() const {
  return std::all_of(block_sizes.begin(), block_sizes.end(), [](const std::vector<int>& b) {
    return std::all_of(b.begin(), b.end(), [](int s) { return s == 1; });
  });
}

EigenDecomposition spectrum(const ComplexMatrix& a, double tol) {
  require_square(a, "spectrum");
  const int n = static_cast<int>(a.rows());
  if (n > kMaxGenericDimension) {
    std::ostringstream os;
    os << "spectrum: dimension " << n << " exceeds the generic limit " << kMaxGenericDimension;
    throw Error(ErrorKind::unsupported, os.str());
  }
  const double scale = std::max(1.0, inf_norm(a));
  const double radius = tol > 0.0 ? tol : kClusterRelTol * scale;

  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::not_converged, "spectrum: QR iteration did not converge");
  }
  std::vector<Complex> raw(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  for (auto& z : raw) {
    if (std::abs(z.imag()) <= radius) z = Complex(z.real(), 0.0);
  }

  // Single-linkage clustering within the merge radius.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(raw[i] - raw[j]) <= radius) parent[root(i)] = root(j);
    }
  }
  struct Cluster {
    Complex mean;
    int count = 0;
  };
  std::vector<Cluster> clusters;
  std::vector<int> cluster_of(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = root(i);
    if (cluster_of[r] < 0) {
      cluster_of[r] = static_cast<int>(clusters.size());
      clusters.push_back({});
    }
    auto& c = clusters[cluster_of[r]];
    c.mean += raw[i];
    c.count += 1;
  }
  for (auto& c : clusters) {
    c.mean /= static_cast<double>(c.count);
    if (std::abs(c.mean) <= radius) c.mean = 0.0;
    if (std::abs(c.mean.imag()) <= radius) c.mean = Complex(c.mean.real(), 0.0);
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const Cluster& x, const Cluster& y) { return eigen_order(x.mean, y.mean); });

  EigenDecomposition out;
  out.tolerance = radius;
  out.right_basis.resize(n, n);
  int offset = 0;
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  for (const auto& c : clusters) {
    const int m = c.count;
    const ComplexMatrix shifted = a - c.mean * id;
    const double shift_scale = std::max(1.0, inf_norm(shifted));
    std::vector<int> nullity(m + 1, 0);
    ComplexMatrix power = id;
    for (int k = 1; k <= m; ++k) {
      power = power * shifted;
      const double cutoff = kRankRelTol * std::pow(shift_scale, k);
      nullity[k] = n - numerical_rank(power, cutoff);
    }
    // Generalized eigenspace: right singular vectors of (A - lambda I)^m for
    // the m smallest singular values.
    Eigen::JacobiSVD<ComplexMatrix> svd(power, Eigen::ComputeFullV);
    out.right_basis.middleCols(offset, m) = svd.matrixV().rightCols(m);

    out.eigenvalues.push_back(c.mean);
    out.multiplicities.push_back(m);
    out.block_sizes.push_back(blocks_from_nullities(std::move(nullity), m));
    out.offsets.push_back(offset);
    offset += m;
  }

  Eigen::JacobiSVD<ComplexMatrix> basis_svd(out.right_basis);
  const auto& sv = basis_svd.singularValues();
  if (sv(n - 1) <= 1e-12 * sv(0)) {
    throw Error(ErrorKind::ill_conditioned,
                "spectrum: generalized eigenvector basis is numerically singular");
  }
  out.left_basis = out.right_basis.fullPivLu().inverse();
  return out;
}

Complex scalar_root_branch(Complex lambda, RootBranch branch) {
  if (lambda == Complex(0.0, 0.0)) {
    throw Error(ErrorKind::invalid_argument,
                "scalar_root_branch: zero has no branch structure");
  }
  double arg = std::arg(lambda);
  if (arg <= -std::numbers::pi) arg = std::numbers::pi;
  const double modulus = std::pow(std::abs(lambda), 1.0 / branch.p);
  const double angle = (arg + 2.0 * std::numbers::pi * branch.j) / branch.p;
  return std::polar(modulus, angle);
}

std::vector<double> generalized_binomials(double x, int count) {
  std::vector<double> c(std::max(count, 0));
  if (count <= 0) return c;
  c[0] = 1.0;
  for (int i = 1; i < count; ++i) c[i] = c[i - 1] * (x - i + 1) / i;
  return c;
}

ComplexMatrix jordan_block(Complex lambda, int m) {
  ComplexMatrix j = lambda * ComplexMatrix::Identity(m, m);
  for (int i = 0; i + 1 < m; ++i) j(i, i + 1) = 1.0;
  return j;
}

ComplexMatrix jordan_block_root(Complex lambda, int m, RootBranch branch) {
  if (m < 1) throw Error(ErrorKind::invalid_argument, "jordan_block_root: m must be >= 1");
  if (lambda == Complex(0.0, 0.0)) {
    if (m == 1) return ComplexMatrix::Zero(1, 1);
    throw Error(ErrorKind::invalid_argument,
                "jordan_block_root: a nilpotent Jordan block of size > 1 has no root of the same "
                "block size");
  }
  const Complex root = scalar_root_branch(lambda, branch);
  const auto binom = generalized_binomials(1.0 / branch.p, m);
  ComplexMatrix r = ComplexMatrix::Zero(m, m);
  Complex lambda_pow = 1.0;
  for (int d = 0; d < m; ++d) {
    const Complex value = binom[d] * root / lambda_pow;
    for (int i = 0; i + d < m; ++i) r(i, i + d) = value;
    lambda_pow *= lambda;
  }
  return r;
}

namespace {

template <typename Matrix>
Matrix power_impl(const Matrix& b, unsigned c) {
  Matrix result = Matrix::Identity(b.rows(), b.cols());
  Matrix base = b;
  while (c > 0) {
    if (c & 1u) result = result * base;
    c >>= 1u;
    if (c > 0) base = base * base;
  }
  return result;
}

}  // namespace

ComplexMatrix matrix_power(const ComplexMatrix& b, unsigned c) {
  require_square(b, "matrix_power");
  return power_impl(b, c);
}

RealMatrix matrix_power(const RealMatrix& b, unsigned c) {
  if (b.rows() != b.cols()) throw Error(ErrorKind::not_square, "matrix_power: not square");
  return power_impl(b, c);
}

ComplexMatrix matrix_exp(const ComplexMatrix& q) {
  require_square(q, "matrix_exp");
  return q.exp();
}

RealMatrix matrix_exp(const RealMatrix& q) {
  if (q.rows() != q.cols()) throw Error(ErrorKind::not_square, "matrix_exp: not square");
  return q.exp();
}

ComplexMatrix matrix_log_principal(const ComplexMatrix& a) {
  require_square(a, "matrix_log_principal");
  const Eigen::Index n = a.rows();
  const double scale = std::max(1.0, inf_norm(a));
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::not_converged, "matrix_log_principal: eigenvalue iteration failed");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex z = solver.eigenvalues()(i);
    if (std::abs(z.imag()) <= kClusterRelTol * scale && z.real() <= kClusterRelTol * scale) {
      std::ostringstream os;
      os << "matrix_log_principal: eigenvalue " << z.real()
         << " lies on the closed negative real axis";
      throw Error(ErrorKind::no_principal_log, os.str());
    }
  }

  return a.log();
}

RealMatrix cycle_matrix(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "cycle_matrix: n must be >= 1");
  RealMatrix c = RealMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) c(i, (i + 1) % n) = 1.0;
  return c;
}

RealMatrix direct_sum(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out = RealMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

}  // namespace afd
