#include <doctest.h>

#include <cmath>

#include "afd/oracle.hpp"
#include "afd/two_by_two.hpp"

using namespace afd;

TEST_CASE("two_by_two_build") {
  const RealMatrix a = two_by_two_build(TwoByTwoParams(0.9, 0.8)).matrix();
  RealMatrix expected(2, 2);
  expected << 0.8, 0.2, 0.1, 0.9;
  CHECK(inf_norm(RealMatrix(a - expected)) < 1e-15);
  CHECK(TwoByTwoParams(0.9, 0.8).lambda() == doctest::Approx(0.7));
  CHECK(two_by_two_build(TwoByTwoParams(0.0, 0.0)).matrix() == cycle_matrix(2));
  CHECK_THROWS_AS(TwoByTwoParams(1.0, 0.5), Error);
}

TEST_CASE("two_by_two_root") {
  const TwoByTwoParams p(0.25, 0.25);
  CHECK(inf_norm(ComplexMatrix(two_by_two_root(p, 1.0) - ComplexMatrix::Identity(2, 2))) < 1e-15);
  CHECK(inf_norm(RealMatrix(two_by_two_root(p, p.lambda()).real() - two_by_two_build(p).matrix())) <
        1e-15);
  const double mu = -std::cbrt(0.5);
  const RealMatrix b = two_by_two_root(p, mu).real();
  CHECK(StochasticMatrix::try_from(b).has_value());
  CHECK(inf_norm(RealMatrix(matrix_power(b, 3u) - two_by_two_build(p).matrix())) < 1e-14);
}

TEST_CASE("classification: FINITE case with b near 3.185") {
  const TwoByTwoClassification c = two_by_two_classify(TwoByTwoParams(0.2, 0.4));
  // b = |log 0.4| / |log 0.8 - log 0.6| = log 2.5 / log(4/3).
  CHECK(c.odd_bound == doctest::Approx(std::log(2.5) / std::log(4.0 / 3.0)).epsilon(1e-14));
  CHECK(c.odd_bound == doctest::Approx(3.185).epsilon(1e-3));
  CHECK(c.report.kind == DivisibilityKind::finite);
  CHECK(c.report.members == std::vector<int>{1, 3});
  CHECK(c.limits.empty());
  for (const auto& [order, w] : c.report.witnesses) {
    CHECK(StochasticMatrix::try_from(w).has_value());
    CHECK(inf_norm(RealMatrix(matrix_power(w, static_cast<unsigned>(order)) -
                              two_by_two_build(TwoByTwoParams(0.2, 0.4)).matrix())) < 1e-13);
  }
}

TEST_CASE("classification: ODD_N when s = t and lambda < 0") {
  const TwoByTwoClassification c = two_by_two_classify(TwoByTwoParams(0.25, 0.25));
  CHECK(c.report.kind == DivisibilityKind::odd_n);
  REQUIRE(c.limits.size() == 1);
  CHECK(c.limits[0] == cycle_matrix(2));
  CHECK(std::isinf(c.odd_bound));
}

TEST_CASE("classification: ALL_N when lambda >= 0") {
  const TwoByTwoClassification c = two_by_two_classify(TwoByTwoParams(0.9, 0.8));
  CHECK(c.report.kind == DivisibilityKind::all_n);
  CHECK(c.limits.size() == 1);
  CHECK(c.limits[0].isIdentity());
  const TwoByTwoClassification sym = two_by_two_classify(TwoByTwoParams(0.7, 0.7));
  CHECK(sym.limits.size() == 2);
  const TwoByTwoClassification sing = two_by_two_classify(TwoByTwoParams(0.3, 0.7));
  CHECK(sing.singular);
  CHECK(sing.report.kind == DivisibilityKind::all_n);
}

TEST_CASE("classification agrees with the brute-force oracle on a small grid") {
  oracle::GridSpec grid;
  grid.s_steps = grid.t_steps = 200;
  for (double s : {0.05, 0.3, 0.55, 0.8}) {
    for (double t : {0.0, 0.1, 0.35, 0.6, 0.9}) {
      const TwoByTwoParams p(s, t);
      const TwoByTwoClassification c = two_by_two_classify(p);
      for (int order = 1; order <= 9; ++order) {
        const bool found = !oracle::brute_force_2x2_roots(two_by_two_build(p).matrix(), order, grid).empty();
        CHECK_MESSAGE(c.report.contains(order) == found, "s=" << s << " t=" << t << " c=" << order);
      }
    }
  }
}
