#include <doctest.h>

#include <cmath>
#include <numbers>

#include "afd/circulant3.hpp"
#include "afd/embed.hpp"
#include "afd/limits.hpp"
#include "afd/two_by_two.hpp"

using namespace afd;

namespace {

ComplexMatrix diag(std::initializer_list<double> xs) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(xs.size()),
                                        static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

RealMatrix example_a() {
  RealMatrix a(3, 3);
  a << 27, 9, 9, 18, 11, 16, 18, 16, 11;
  return a / 45.0;
}

RealMatrix example_m_inverse() {
  RealMatrix m(3, 3);
  m << 3, -1, -1, -2, 6, -3, -2, -3, 6;
  return m.inverse();
}

double dist(const RealMatrix& x, const RealMatrix& y) { return inf_norm(RealMatrix(x - y)); }

}  // namespace

TEST_CASE("rearrangement matrix of a diagonalizable matrix with itself") {
  const ComplexMatrix a = example_a().cast<Complex>();
  const RearrangementMatrix m = rearrangement_matrix(a, a);
  CHECK(m.entries == Eigen::MatrixXi::Identity(3, 3));
  CHECK(validate_rearrangement(m, a, a).empty());
}

TEST_CASE("six-dimensional diagonal pair") {
  const ComplexMatrix a = diag({0.5, 0.5, 0.5, -0.5, -0.5, -0.5});
  const ComplexMatrix l = diag({1, 1, -1, -1, -1, 1});
  const RearrangementMatrix m = rearrangement_matrix(a, l);
  Eigen::MatrixXi expected(2, 2);
  expected << 2, 1, 1, 2;
  CHECK(m.entries == expected);
  CHECK(m.row_labels[0] == Complex(0.5, 0.0));
  CHECK(m.col_labels[0] == Complex(1.0, 0.0));
  CHECK(validate_rearrangement(m, a, l).empty());
  // Entries (lambda, -1) and (-lambda, 1) are odd: no even-order sequence fits.
  CHECK_FALSE(validate_rearrangement(m, a, l, RootParity::even).empty());
  CHECK_FALSE(validate_rearrangement(m, a, l, RootParity::odd).empty());

  RearrangementMatrix broken = m;
  broken.entries(0, 0) = 3;
  CHECK_FALSE(validate_rearrangement(broken, a, l).empty());
}

TEST_CASE("circulant with distinct eigenvalues against C3") {
  const ComplexMatrix a = circulant_realize(CirculantParams(0.5, 0.7)).cast<Complex>();
  const ComplexMatrix l = cycle_matrix(3).cast<Complex>();
  const RearrangementMatrix m = rearrangement_matrix(a, l);
  // Circulants share the Fourier eigenvectors: one-to-one correspondence.
  CHECK(m.entries.rows() == 3);
  CHECK(m.entries.cols() == 3);
  CHECK(m.entries.sum() == 3);
  CHECK((m.entries.rowwise().sum().array() == 1).all());
  CHECK(m.entries(0, 0) == 1);
  CHECK(validate_rearrangement(m, a, l).empty());
}

TEST_CASE("stochastic first-row constraint") {
  const ComplexMatrix a = example_a().cast<Complex>();
  const ComplexMatrix l = direct_sum(RealMatrix::Identity(1, 1), cycle_matrix(2)).cast<Complex>();
  const RearrangementMatrix m = rearrangement_matrix(a, l);
  CHECK(m.entries(0, 0) == 1);
  CHECK(validate_rearrangement(m, a, l).empty());
  CHECK(validate_rearrangement(m, a, l, RootParity::odd).empty());
  RearrangementMatrix broken = m;
  broken.entries(0, 0) = 0;
  broken.entries(0, 1) = 1;
  CHECK_FALSE(validate_rearrangement(broken, a, l).empty());
}

TEST_CASE("limit candidates are integer partitions") {
  const auto c1 = limit_candidates(1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].realization.isIdentity());
  const auto c3 = limit_candidates(3);
  REQUIRE(c3.size() == 3);
  CHECK(c3[0].partition == std::vector<int>{3});
  CHECK(c3[0].realization == cycle_matrix(3));
  CHECK(c3[0].l0 == 3);
  CHECK(c3[1].partition == std::vector<int>{2, 1});
  CHECK(c3[1].l0 == 2);
  CHECK(c3[2].realization.isIdentity());
  CHECK(c3[2].l0 == 1);
  CHECK(limit_candidates(4).size() == 5);
  CHECK(limit_candidates(6).size() == 11);
  CHECK(limit_candidates(6)[2].l0 == 4);  // {4, 2}
  CHECK(make_limit_candidate({3, 2}).l0 == 6);
}

TEST_CASE("construct_afd reproduces the M-matrix example") {
  const LimitCandidate l = make_limit_candidate({1, 2});
  const RealMatrix q = matrix_log_principal(example_m_inverse().cast<Complex>()).real();
  REQUIRE(is_generator(q, 1e-10));
  const StochasticMatrix a = construct_afd(l, q);
  CHECK(dist(a.matrix(), example_a()) < 1e-12);
  for (int k = 0; k <= 20; ++k) {
    const RealMatrix w = construct_afd_witness(l, q, k);
    const unsigned order = static_cast<unsigned>(k * l.l0 + 1);
    CHECK(StochasticMatrix::try_from(w).has_value());
    CHECK(dist(matrix_power(w, order), a.matrix()) <= 1e-9);
  }
}

TEST_CASE("construct_afd with the identity gives exp(Q)") {
  RealMatrix q(3, 3);
  q << -0.5, 0.3, 0.2, 0.1, -0.4, 0.3, 0.2, 0.2, -0.4;
  const StochasticMatrix a = construct_afd(make_limit_candidate({1, 1, 1}), q);
  CHECK(dist(a.matrix(), matrix_exp(q)) < 1e-15);
}

TEST_CASE("construct_afd with C3 and a circulant generator") {
  const double s0 = 0.6;
  const RealMatrix q = s0 * (-RealMatrix::Identity(3, 3) + RealMatrix::Constant(3, 3, 1.0 / 3.0));
  const StochasticMatrix a = construct_afd(make_limit_candidate({3}), q);
  const CirculantParams p = circulant_from_matrix(a);
  CHECK(circulant_classify(p).c3_sufficient);
}

TEST_CASE("construct_afd errors") {
  RealMatrix q(3, 3);
  q << -0.5, 0.3, 0.2, 0.1, -0.4, 0.3, 0.2, 0.2, -0.4;
  try {
    construct_afd(make_limit_candidate({3}), q);
    FAIL("expected not_commuting");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_commuting);
  }
  RealMatrix bad = q;
  bad(0, 1) = -0.1;
  bad(0, 0) = -0.1;
  try {
    construct_afd(make_limit_candidate({1, 1, 1}), bad);
    FAIL("expected not_generator");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_generator);
  }
}

TEST_CASE("accumulation of circulant root sequences") {
  const CirculantParams p0(1.2, 0.5);  // s0 >= sqrt(3)|t0|
  std::vector<std::pair<int, StochasticMatrix>> b0, b3q;
  for (int c = 1; c <= 300; ++c) {
    b0.emplace_back(c, StochasticMatrix::from(circulant_realize(circulant_root(p0, c, 0))));
  }
  for (int q = 1; q <= 100; ++q) {
    b3q.emplace_back(3 * q, StochasticMatrix::from(circulant_realize(circulant_root(p0, 3 * q, q))));
  }
  const RealMatrix c3 = cycle_matrix(3);
  const auto clusters0 = accumulation_points(b0, 0.2);
  REQUIRE_FALSE(clusters0.empty());
  const auto& tail0 = clusters0.back();
  CHECK(tail0.empirical);
  CHECK(dist(tail0.center, RealMatrix::Identity(3, 3)) < 0.05);
  REQUIRE(tail0.matched_partition.has_value());
  CHECK(*tail0.matched_partition == std::vector<int>{1, 1, 1});

  const auto clusters3 = accumulation_points(b3q, 0.2);
  const auto& tail3 = clusters3.back();
  CHECK(tail3.empirical);
  CHECK(dist(tail3.center, RealMatrix(c3 * c3)) < 0.05);
  REQUIRE(tail3.matched_partition.has_value());
  CHECK(*tail3.matched_partition == std::vector<int>{3});
}

TEST_CASE("odd roots of a symmetric 2x2 accumulate at C2") {
  const TwoByTwoParams p(0.25, 0.25);
  std::vector<std::pair<int, StochasticMatrix>> seq;
  for (int c = 1; c <= 401; c += 2) {
    const double mu = -std::pow(0.5, 1.0 / c);
    seq.emplace_back(c, StochasticMatrix::from(RealMatrix(two_by_two_root(p, mu).real())));
  }
  const auto clusters = accumulation_points(seq, 0.1);
  const auto& tail = clusters.back();
  CHECK(tail.empirical);
  CHECK(dist(tail.center, cycle_matrix(2)) < 0.01);
  // Stationarity of the limit: w^T L = w^T.
  const RealVector w = stationary_distribution(two_by_two_build(p));
  CHECK((w.transpose() * tail.center - w.transpose()).cwiseAbs().maxCoeff() <= 0.1);
}

TEST_CASE("permutation matching") {
  RealMatrix l = RealMatrix::Zero(4, 4);
  l(0, 2) = l(2, 0) = 1.0;
  l(1, 1) = l(3, 3) = 1.0;
  const auto m = match_limit_candidate(l, 1e-9);
  REQUIRE(m.has_value());
  CHECK(m->partition == std::vector<int>{2, 1, 1});
  CHECK(m->distance == 0.0);
  CHECK_FALSE(match_limit_candidate(RealMatrix::Constant(4, 4, 0.25), 0.1).has_value());
  CHECK_THROWS_AS(match_limit_candidate(RealMatrix::Identity(7, 7), 0.1), Error);
}
