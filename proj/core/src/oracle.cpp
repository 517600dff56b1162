#include "afd/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace afd::oracle {

namespace {

using Mat2 = std::array<double, 4>;  // row-major

Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

Mat2 power(Mat2 b, int c) {
  Mat2 r{1.0, 0.0, 0.0, 1.0};
  while (c > 0) {
    if (c & 1) r = mul(r, b);
    b = mul(b, b);
    c >>= 1;
  }
  return r;
}

// (S - s, T - t) for B(s', t')^c = [[T, .], [., S]].
std::array<double, 2> defect(double sp, double tp, int c, double s, double t) {
  const Mat2 p = power({tp, 1.0 - tp, 1.0 - sp, sp}, c);
  return {p[3] - s, p[0] - t};
}

double residual(double sp, double tp, int c, double s, double t) {
  const auto d = defect(sp, tp, c, s, t);
  return std::max(std::abs(d[0]), std::abs(d[1]));
}

}  // namespace

std::vector<Eigen::MatrixXd> brute_force_2x2_roots(const Eigen::MatrixXd& a, int c,
                                                   const GridSpec& grid) {
  if (a.rows() != 2 || a.cols() != 2) throw std::invalid_argument("oracle: expected 2x2");
  if (c < 1) throw std::invalid_argument("oracle: c must be positive");
  const double s = a(1, 1);
  const double t = a(0, 0);
  const int ns = grid.s_steps;
  const int nt = grid.t_steps;
  auto s_at = [&](int i) { return grid.s_lo + (grid.s_hi - grid.s_lo) * i / (ns - 1); };
  auto t_at = [&](int j) { return grid.t_lo + (grid.t_hi - grid.t_lo) * j / (nt - 1); };

  std::vector<double> res(static_cast<std::size_t>(ns) * nt);
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nt; ++j) res[i * nt + j] = residual(s_at(i), t_at(j), c, s, t);
  }

  std::vector<std::array<double, 2>> found;
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nt; ++j) {
      const double r0 = res[i * nt + j];
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          const int ii = i + di, jj = j + dj;
          if ((di == 0 && dj == 0) || ii < 0 || jj < 0 || ii >= ns || jj >= nt) continue;
          if (res[ii * nt + jj] < r0) {
            is_min = false;
            break;
          }
        }
      }
      if (!is_min) continue;

      // Damped Newton with a finite-difference Jacobian.
      double x = s_at(i), y = t_at(j);
      double r = r0;
      for (int step = 0; step < 80 && r > 1e-14; ++step) {
        const double h = 1e-7;
        const auto f = defect(x, y, c, s, t);
        const auto fx = defect(x + h, y, c, s, t);
        const auto fy = defect(x, y + h, c, s, t);
        const double j00 = (fx[0] - f[0]) / h, j01 = (fy[0] - f[0]) / h;
        const double j10 = (fx[1] - f[1]) / h, j11 = (fy[1] - f[1]) / h;
        const double det = j00 * j11 - j01 * j10;
        if (det == 0.0 || !std::isfinite(det)) break;
        const double dx = (j11 * f[0] - j01 * f[1]) / det;
        const double dy = (-j10 * f[0] + j00 * f[1]) / det;
        double damp = 1.0;
        bool improved = false;
        for (int k = 0; k < 30; ++k) {
          const double nx = x - damp * dx, ny = y - damp * dy;
          const double nr = residual(nx, ny, c, s, t);
          if (nr < r) {
            x = nx;
            y = ny;
            r = nr;
            improved = true;
            break;
          }
          damp *= 0.5;
        }
        if (!improved) break;
      }
      if (r > 1e-10) continue;
      if (x < -1e-9 || x > 1.0 + 1e-9 || y < -1e-9 || y > 1.0 + 1e-9) continue;
      x = std::clamp(x, 0.0, 1.0);
      y = std::clamp(y, 0.0, 1.0);
      const bool dup = std::any_of(found.begin(), found.end(), [&](const auto& p) {
        return std::abs(p[0] - x) <= 1e-6 && std::abs(p[1] - y) <= 1e-6;
      });
      if (!dup) found.push_back({x, y});
    }
  }

  std::vector<Eigen::MatrixXd> out;
  for (const auto& [sp, tp] : found) {
    Eigen::MatrixXd b(2, 2);
    b << tp, 1.0 - tp, 1.0 - sp, sp;
    out.push_back(b);
  }
  return out;
}

bool direct_region_eval(double s, double t) {
  const double pi = std::numbers::pi;
  const double r = 2.0 * std::exp(-s);
  const double g1 = 1.0 + r * std::sin(t + pi / 2.0);
  const double g2 = 1.0 + r * std::sin(t - pi / 6.0);
  const double g3 = 1.0 + r * std::sin(-t - pi / 6.0);
  return std::min({g1, g2, g3}) >= 0.0;
}

int exhaustive_branch_check(const Eigen::MatrixXcd& a, int p) {
  using C = std::complex<double>;
  if (a.rows() != a.cols()) throw std::invalid_argument("oracle: matrix not square");
  if (p < 1) throw std::invalid_argument("oracle: p must be positive");
  const Eigen::Index n = a.rows();
  const double scale = std::max(1.0, a.cwiseAbs().rowwise().sum().maxCoeff());

  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, false);
  std::vector<C> values(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::vector<C> nonzero;
  int zero_count = 0;
  for (const C& z : values) {
    if (std::abs(z) <= 1e-9 * scale) {
      ++zero_count;
    } else {
      nonzero.push_back(z);
    }
  }
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
      if (std::abs(nonzero[i] - nonzero[j]) <= 1e-6 * scale) {
        throw std::invalid_argument("oracle: repeated nonzero eigenvalue");
      }
    }
  }

  // Eigenvectors from null vectors of (A - z I).
  Eigen::MatrixXcd v(n, n);
  Eigen::Index col = 0;
  for (const C& z : nonzero) {
    const Eigen::MatrixXcd shifted = a - z * Eigen::MatrixXcd::Identity(n, n);
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted, Eigen::ComputeFullV);
    v.col(col++) = svd.matrixV().col(n - 1);
  }
  if (zero_count > 0) {
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    for (Eigen::Index k = n - zero_count; k < n; ++k) {
      if (sv(k) > 1e-9 * scale) throw std::invalid_argument("oracle: nilpotent zero part");
    }
    v.rightCols(zero_count) = svd.matrixV().rightCols(zero_count);
  }
  const Eigen::FullPivLU<Eigen::MatrixXcd> lu(v);
  if (!lu.isInvertible()) throw std::invalid_argument("oracle: eigenvectors are dependent");
  const Eigen::MatrixXcd vinv = lu.inverse();

  const std::size_t s = nonzero.size();
  double tuples = std::pow(static_cast<double>(p), static_cast<double>(s));
  if (tuples > 1e6) throw std::invalid_argument("oracle: too many branch tuples");

  const double pi = std::numbers::pi;
  std::vector<int> idx(s, 0);
  int count = 0;
  while (true) {
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(n);
    for (std::size_t k = 0; k < s; ++k) {
      const C z = nonzero[k];
      d(static_cast<Eigen::Index>(k)) =
          std::polar(std::pow(std::abs(z), 1.0 / p), (std::arg(z) + 2.0 * pi * idx[k]) / p);
    }
    const Eigen::MatrixXcd b = v * d.asDiagonal() * vinv;
    bool ok = b.imag().cwiseAbs().maxCoeff() <= 1e-8 * scale;
    const Eigen::MatrixXd br = b.real();
    if (ok) ok = br.minCoeff() >= -1e-9;
    if (ok) ok = ((br.rowwise().sum().array() - 1.0).abs() <= 1e-9).all();
    if (ok) {
      Eigen::MatrixXcd pw = Eigen::MatrixXcd::Identity(n, n);
      for (int k = 0; k < p; ++k) pw = pw * b;
      ok = (pw - a).cwiseAbs().maxCoeff() <= 1e-8 * scale;
    }
    if (ok) ++count;

    std::size_t pos = 0;
    while (pos < s) {
      if (++idx[pos] < p) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == s) break;
  }
  return count;
}

}  // namespace afd::oracle
