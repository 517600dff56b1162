#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "afd/numerics.hpp"

using namespace afd;

namespace {

RealMatrix example_a() {
  RealMatrix a(3, 3);
  a << 27, 9, 9, 18, 11, 16, 18, 16, 11;
  return a / 45.0;
}

double dist(const ComplexMatrix& x, const ComplexMatrix& y) { return inf_norm(ComplexMatrix(x - y)); }

}  // namespace

TEST_CASE("spectrum of the 3x3 M-matrix example") {
  const EigenDecomposition d = spectrum(example_a().cast<Complex>());
  REQUIRE(d.distinct_count() == 3);
  CHECK(std::abs(d.eigenvalues[0] - 1.0) < 1e-12);
  CHECK(std::abs(d.eigenvalues[1] - 0.2) < 1e-12);
  CHECK(std::abs(d.eigenvalues[2] + 1.0 / 9.0) < 1e-12);
  CHECK(d.diagonalizable());
}

TEST_CASE("spectrum orders reals descending then conjugate pairs") {
  // Eigenvalues 0.5 +- 0.5i, 2, -1 via a real block-diagonal matrix.
  RealMatrix a = RealMatrix::Zero(4, 4);
  a(0, 0) = -1.0;
  a.block(1, 1, 2, 2) << 0.5, 0.5, -0.5, 0.5;
  a(3, 3) = 2.0;
  const EigenDecomposition d = spectrum(a.cast<Complex>());
  REQUIRE(d.distinct_count() == 4);
  CHECK(d.eigenvalues[0] == Complex(2.0, 0.0));
  CHECK(d.eigenvalues[1].real() == doctest::Approx(-1.0));
  CHECK(d.eigenvalues[1].imag() == 0.0);
  CHECK(d.eigenvalues[2].imag() > 0.0);
  CHECK(std::abs(d.eigenvalues[3] - std::conj(d.eigenvalues[2])) < 1e-12);
}

TEST_CASE("Jordan structure of a defective matrix") {
  // J_3(2) + J_1(2) conjugated by a fixed well-conditioned matrix.
  ComplexMatrix j = ComplexMatrix::Zero(4, 4);
  j.topLeftCorner(3, 3) = jordan_block(2.0, 3);
  j(3, 3) = 2.0;
  ComplexMatrix s(4, 4);
  s << 1, 0.2, 0, 0.1, 0, 1, 0.3, 0, 0.1, 0, 1, 0.2, 0, 0.1, 0, 1;
  const ComplexMatrix a = s * j * s.inverse();
  // A triple eigenvalue is split by about eps^(1/3); the default radius is too
  // tight to merge it, so the caller widens it.
  CHECK(spectrum(a).distinct_count() > 1);
  const EigenDecomposition d = spectrum(a, 1e-4);
  REQUIRE(d.distinct_count() == 1);
  CHECK(d.multiplicities[0] == 4);
  CHECK(d.block_sizes[0] == std::vector<int>{3, 1});
  CHECK_FALSE(d.diagonalizable());
}

TEST_CASE("spectral blocks reassemble the matrix") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    RealMatrix a(5, 5);
    for (int i = 0; i < 25; ++i) a.data()[i] = u(rng);
    const ComplexMatrix ac = a.cast<Complex>();
    const EigenDecomposition d = spectrum(ac);
    ComplexMatrix sum = ComplexMatrix::Zero(5, 5);
    for (std::size_t k = 0; k < d.distinct_count(); ++k) {
      sum += d.right_block(k) * d.restrict(ac, k) * d.left_block(k);
    }
    CHECK(dist(sum, ac) < 1e-10);
  }
}

TEST_CASE("jordan_block_root powers back to the block") {
  const Complex lambdas[] = {Complex(0.7, 0.0), Complex(-0.4, 0.3), Complex(2.5, -1.0),
                             Complex(-1.0, 0.0)};
  for (const Complex lambda : lambdas) {
    for (int m = 1; m <= 4; ++m) {
      for (int p = 1; p <= 7; ++p) {
        for (int j = 0; j < p; ++j) {
          const ComplexMatrix r = jordan_block_root(lambda, m, RootBranch(p, j));
          const double err = dist(matrix_power(r, static_cast<unsigned>(p)), jordan_block(lambda, m));
          CHECK_MESSAGE(err < 1e-12, "lambda=" << lambda << " m=" << m << " p=" << p << " j=" << j);
        }
      }
    }
  }
}

TEST_CASE("jordan_block_root rejects nilpotent blocks of size > 1") {
  CHECK(jordan_block_root(0.0, 1, RootBranch(3, 0))(0, 0) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(jordan_block_root(0.0, 2, RootBranch(2, 0)), Error);
}

TEST_CASE("root branches") {
  // Principal square root of -4 is 2i; the other branch is -2i.
  CHECK(std::abs(scalar_root_branch(-4.0, RootBranch(2, 0)) - Complex(0.0, 2.0)) < 1e-15);
  CHECK(std::abs(scalar_root_branch(-4.0, RootBranch(2, 1)) - Complex(0.0, -2.0)) < 1e-15);
  // Cube roots of 8: 2, 2 e^{2 pi i/3}, 2 e^{4 pi i/3}.
  for (int j = 0; j < 3; ++j) {
    const Complex r = scalar_root_branch(8.0, RootBranch(3, j));
    CHECK(std::abs(r - std::polar(2.0, 2.0 * std::numbers::pi * j / 3.0)) < 1e-14);
  }
  CHECK_THROWS_AS(RootBranch(0, 0), Error);
  CHECK_THROWS_AS(RootBranch(3, 3), Error);
}

TEST_CASE("generalized binomial coefficients") {
  const auto c = generalized_binomials(0.5, 4);
  CHECK(c[0] == 1.0);
  CHECK(c[1] == doctest::Approx(0.5));
  CHECK(c[2] == doctest::Approx(-0.125));
  CHECK(c[3] == doctest::Approx(0.0625));
}

TEST_CASE("matrix_exp against closed forms") {
  // exp([[-1, 1], [1, -1]]) = (1/2)[[1 + e^-2, 1 - e^-2], [1 - e^-2, 1 + e^-2]].
  RealMatrix q(2, 2);
  q << -1, 1, 1, -1;
  const double e = std::exp(-2.0);
  RealMatrix expected(2, 2);
  expected << 1 + e, 1 - e, 1 - e, 1 + e;
  expected /= 2.0;
  CHECK(inf_norm(RealMatrix(matrix_exp(q) - expected)) < 1e-15);

  // Rotation generator: exp(theta [[0, -1], [1, 0]]) = rotation by theta.
  const double theta = 2.3;
  RealMatrix g(2, 2);
  g << 0, -theta, theta, 0;
  RealMatrix rot(2, 2);
  rot << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  CHECK(inf_norm(RealMatrix(matrix_exp(g) - rot)) < 1e-14);

  // Large norm: exp(-30 I) = e^-30 I.
  const RealMatrix big = -30.0 * RealMatrix::Identity(3, 3);
  CHECK(std::abs(matrix_exp(big)(1, 1) / std::exp(-30.0) - 1.0) < 1e-13);
}

TEST_CASE("principal log round trips through exp") {
  RealMatrix q(2, 2);
  q << -1, 1, 1, -1;
  const ComplexMatrix l = matrix_log_principal(matrix_exp(q).cast<Complex>());
  CHECK(dist(l, q.cast<Complex>()) < 1e-8);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexMatrix x(4, 4);
    for (int i = 0; i < 16; ++i) x.data()[i] = Complex(u(rng), u(rng));
    const ComplexMatrix back = matrix_log_principal(matrix_exp(x));
    CHECK(dist(back, x) < 1e-10);
  }
}

TEST_CASE("principal log rejects the closed negative axis") {
  const RealMatrix c2 = cycle_matrix(2);
  CHECK_THROWS_AS(matrix_log_principal(c2.cast<Complex>()), Error);
  try {
    matrix_log_principal(example_a().cast<Complex>());
    FAIL("expected no_principal_log");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::no_principal_log);
  }
}

TEST_CASE("matrix_power and cycle matrices") {
  const RealMatrix c3 = cycle_matrix(3);
  CHECK(c3(0, 1) == 1.0);
  CHECK(c3(2, 0) == 1.0);
  CHECK(matrix_power(c3, 3u).isIdentity());
  CHECK_FALSE(matrix_power(c3, 2u).isIdentity());
  CHECK(matrix_power(c3, 0u).isIdentity());
  const RealMatrix ds = direct_sum(RealMatrix::Identity(1, 1), cycle_matrix(2));
  RealMatrix expected(3, 3);
  expected << 1, 0, 0, 0, 0, 1, 0, 1, 0;
  CHECK(ds == expected);
}

TEST_CASE("numerical rank and norms") {
  RealMatrix a(3, 3);
  a << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  CHECK(numerical_rank(a.cast<Complex>(), 1e-10) == 2);
  CHECK(inf_norm(a) == 12.0);
  CHECK_THROWS_AS(spectrum(ComplexMatrix::Zero(2, 3)), Error);
}
