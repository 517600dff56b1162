#include "afd/embed.hpp"

#include <cmath>
#include <sstream>

namespace afd {

namespace {

void require_nonsingular(const RealMatrix& a, const char* what) {
  const double cutoff = 1e-12 * std::max(1.0, inf_norm(a));
  if (numerical_rank(a.cast<Complex>(), cutoff) < a.rows()) {
    throw Error(ErrorKind::singular, std::string(what) + ": matrix is singular");
  }
}

}  // namespace

const char* to_string(GeneratorRejection r) noexcept {
  switch (r) {
    case GeneratorRejection::none: return "none";
    case GeneratorRejection::nonpositive_real_eigenvalue: return "nonpositive_real_eigenvalue";
    case GeneratorRejection::negative_off_diagonal: return "negative_off_diagonal";
  }
  return "unknown";
}

bool is_generator(const ComplexMatrix& q, double tol) {
  require_square(q, "is_generator");
  if (max_imag(q) > tol) {
    throw Error(ErrorKind::invalid_argument, "is_generator: matrix has complex entries");
  }
  return is_generator(RealMatrix(q.real()), tol);
}

bool is_generator(const RealMatrix& q, double tol) {
  if (q.rows() != q.cols()) throw Error(ErrorKind::not_square, "is_generator: matrix is not square");
  for (Eigen::Index i = 0; i < q.rows(); ++i) {
    if (std::abs(q.row(i).sum()) > tol) return false;
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
      if (i != j && q(i, j) < -tol) return false;
    }
  }
  return true;
}

GeneratorResult extract_generator(const StochasticMatrix& a, double tol) {
  require_nonsingular(a.matrix(), "extract_generator");
  GeneratorResult out;
  ComplexMatrix log;
  try {
    log = matrix_log_principal(a.complex());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::no_principal_log) throw;
    out.rejection = GeneratorRejection::nonpositive_real_eigenvalue;
    out.detail = e.what();
    return out;
  }
  RealMatrix q = log.real();
  out.log = q;
  for (Eigen::Index i = 0; i < q.rows(); ++i) {
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
      if (i != j && q(i, j) < -tol) {
        std::ostringstream os;
        os << "principal log has off-diagonal entry " << q(i, j) << " at (" << i << ", " << j
           << ")";
        out.rejection = GeneratorRejection::negative_off_diagonal;
        out.detail = os.str();
        return out;
      }
    }
  }
  if (!is_generator(q, tol)) {
    out.rejection = GeneratorRejection::negative_off_diagonal;
    out.detail = "principal log fails the row-sum condition";
    return out;
  }
  out.generator = q;
  return out;
}

bool is_inverse_M_matrix(const StochasticMatrix& a, double tol) {
  require_nonsingular(a.matrix(), "is_inverse_M_matrix");
  const RealMatrix inv = a.matrix().fullPivLu().inverse();
  for (Eigen::Index i = 0; i < inv.rows(); ++i) {
    for (Eigen::Index j = 0; j < inv.cols(); ++j) {
      if (i != j && inv(i, j) > tol) return false;
    }
  }
  const Eigen::ComplexEigenSolver<ComplexMatrix> es(inv.cast<Complex>(), false);
  return (es.eigenvalues().real().array() > 0.0).all();
}

}  // namespace afd
