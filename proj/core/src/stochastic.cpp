#include "afd/stochastic.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace afd {

std::optional<std::string> stochastic_violation(const RealMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return "matrix is not square";
  if (!m.allFinite()) return "matrix has a non-finite entry";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) < -tol) {
        std::ostringstream os;
        os << "entry (" << i << "," << j << ") = " << m(i, j) << " is negative";
        return os.str();
      }
    }
    const double sum = m.row(i).sum();
    if (std::abs(sum - 1.0) > tol) {
      std::ostringstream os;
      os << "row " << i << " sums to " << sum;
      return os.str();
    }
  }
  return std::nullopt;
}

bool is_irreducible(const RealMatrix& m, double tol) {
  const Eigen::Index n = m.rows();
  if (n == 0) return false;
  auto reaches_all = [&](bool transpose) {
    std::vector<char> seen(n, 0);
    std::vector<Eigen::Index> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const Eigen::Index u = stack.back();
      stack.pop_back();
      for (Eigen::Index v = 0; v < n; ++v) {
        const double w = transpose ? m(v, u) : m(u, v);
        if (w > tol && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    for (char s : seen) {
      if (!s) return false;
    }
    return true;
  };
  return reaches_all(false) && reaches_all(true);
}

StochasticMatrix::StochasticMatrix(RealMatrix m, double tol)
    : matrix_(std::move(m)), tol_(tol), irreducible_(is_irreducible(matrix_, tol)) {}

std::optional<StochasticMatrix> StochasticMatrix::try_from(const RealMatrix& m, double tol) {
  if (stochastic_violation(m, tol)) return std::nullopt;
  RealMatrix clamped = m.cwiseMax(0.0);
  return StochasticMatrix(std::move(clamped), tol);
}

std::optional<StochasticMatrix> StochasticMatrix::try_from(const ComplexMatrix& m, double tol) {
  if (m.size() == 0 || max_imag(m) > tol) return std::nullopt;
  return try_from(RealMatrix(m.real()), tol);
}

StochasticMatrix StochasticMatrix::from(const RealMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorKind::not_square, "stochastic matrix must be square and non-empty");
  }
  if (auto why = stochastic_violation(m, tol)) {
    throw Error(ErrorKind::not_stochastic, "not stochastic: " + *why);
  }
  return StochasticMatrix(m.cwiseMax(0.0), tol);
}

StochasticMatrix StochasticMatrix::from(const ComplexMatrix& m, double tol) {
  if (m.size() != 0 && max_imag(m) > tol) {
    throw Error(ErrorKind::not_stochastic, "not stochastic: matrix has complex entries");
  }
  return from(RealMatrix(m.real()), tol);
}

StochasticMatrix StochasticMatrix::identity(int n) {
  return StochasticMatrix(RealMatrix::Identity(n, n), kStochasticTol);
}

RealVector stationary_distribution(const StochasticMatrix& a) {
  const int n = a.size();
  RealMatrix system(n + 1, n);
  system.topRows(n) = a.matrix().transpose() - RealMatrix::Identity(n, n);
  system.row(n).setOnes();
  RealVector rhs = RealVector::Zero(n + 1);
  rhs(n) = 1.0;
  return system.colPivHouseholderQr().solve(rhs);
}

}  // namespace afd
