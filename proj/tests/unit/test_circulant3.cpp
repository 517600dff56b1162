#include <doctest.h>

#include <cmath>
#include <numbers>

#include "afd/circulant3.hpp"
#include "afd/oracle.hpp"

using namespace afd;

namespace {

constexpr double kPi = std::numbers::pi;
const double kThird = 2.0 * kPi / 3.0;

double dist(const RealMatrix& x, const RealMatrix& y) { return inf_norm(RealMatrix(x - y)); }

RealMatrix c3() { return cycle_matrix(3); }

}  // namespace

TEST_CASE("angle normalization into (-pi, pi]") {
  CHECK(normalize_angle(-kPi) == doctest::Approx(kPi));
  CHECK(normalize_angle(kPi) == doctest::Approx(kPi));
  CHECK(normalize_angle(3.0 * kPi / 2.0) == doctest::Approx(-kPi / 2.0));
  CHECK(CirculantParams(0.1, 0.3 + 4.0 * kPi).t == doctest::Approx(0.3));
  CHECK_THROWS_AS(CirculantParams(-0.1, 0.0), Error);
}

TEST_CASE("gamma row sums and realization") {
  for (double s = 0.0; s <= 2.0; s += 0.1) {
    for (double t = -kPi; t <= kPi; t += 0.07) {
      const auto g = circulant_gamma(CirculantParams(s, t));
      CHECK(std::abs(g[0] + g[1] + g[2] - 3.0) < 1e-14);
    }
  }
  CHECK(circulant_realize(CirculantParams(0.0, 0.0)).isIdentity(1e-15));
  CHECK(dist(circulant_realize(CirculantParams(0.0, -kThird)), c3()) < 1e-15);
}

TEST_CASE("realized matrix has eigenvalues exp(-s +- i t)") {
  const CirculantParams p(0.4, 1.1);
  const EigenDecomposition d = spectrum(circulant_realize(p).cast<Complex>());
  REQUIRE(d.distinct_count() == 3);
  CHECK(std::abs(d.eigenvalues[0] - 1.0) < 1e-12);
  CHECK(std::abs(d.eigenvalues[1] - std::polar(std::exp(-0.4), 1.1)) < 1e-12);
}

TEST_CASE("permutation identities") {
  RealMatrix flip = RealMatrix::Zero(3, 3);
  flip(0, 0) = 1.0;
  flip(1, 2) = flip(2, 1) = 1.0;
  for (double s = 0.0; s <= 2.0; s += 0.25) {
    for (double t = -kPi; t <= kPi; t += 0.3) {
      const RealMatrix g = circulant_realize(CirculantParams(s, t));
      CHECK(dist(circulant_realize(CirculantParams(s, -t)), flip * g * flip) <= 1e-12);
      CHECK(dist(circulant_realize(CirculantParams(s, t - kThird)), c3() * g) <= 1e-12);
      CHECK(dist(circulant_realize(CirculantParams(s, t + kThird)), c3() * c3() * g) <= 1e-12);
    }
  }
}

TEST_CASE("B(3q, +-q) are C3 rotations of B(3q, 0)") {
  const CirculantParams p0(0.9, 0.4);
  for (int q = 1; q <= 40; ++q) {
    const RealMatrix b0 = circulant_realize(circulant_root(p0, 3 * q, 0));
    CHECK(dist(circulant_realize(circulant_root(p0, 3 * q, q)), c3() * c3() * b0) <= 1e-12);
    CHECK(dist(circulant_realize(circulant_root(p0, 3 * q, -q)), c3() * b0) <= 1e-12);
  }
}

TEST_CASE("root law B(c, k)^c = Gamma(s0, t0)") {
  const CirculantParams p0(0.7, -2.5);
  const RealMatrix a = circulant_realize(p0);
  for (int c = 1; c <= 12; ++c) {
    for (long k = -c; k <= c; ++k) {
      const RealMatrix b = circulant_realize(circulant_root(p0, c, k));
      CHECK(dist(matrix_power(b, static_cast<unsigned>(c)), a) < 1e-12);
    }
  }
}

TEST_CASE("k floor and ceil") {
  // (7 * 2pi/3 - pi/2) / 2pi = 7/3 - 1/4 = 2.083...
  CHECK(circulant_k_floor(kThird, 7, kPi / 2.0) == 2);
  CHECK(circulant_k_ceil(kThird, 7, kPi / 2.0) == 3);
  CHECK(circulant_k_floor(0.0, 5, 0.3) == -1);
  CHECK(circulant_k_ceil(0.0, 5, 0.3) == 0);
}

TEST_CASE("psi and the nonnegativity region") {
  CHECK(circulant_psi(0.0) == doctest::Approx(0.0));
  CHECK(circulant_psi(std::log(2.0)) == doctest::Approx(kPi / 3.0));
  CHECK(circulant_is_nonneg(CirculantParams(std::log(2.0), kPi)));
  CHECK_FALSE(circulant_is_nonneg(CirculantParams(0.0, kPi / 6.0)));
  CHECK(circulant_is_nonneg(CirculantParams(5.0, 1.0)));
  CHECK(circulant_is_nonneg(CirculantParams(0.1, kThird)));
}

TEST_CASE("interval test agrees with direct evaluation on a grid") {
  int disagreements = 0;
  for (int i = 0; i < 120; ++i) {
    for (int j = 0; j < 120; ++j) {
      const double s = 2.0 * i / 119.0;
      const double t = -kPi + 2.0 * kPi * (j + 1) / 120.0;
      const CirculantParams p(s, t);
      if (std::abs(circulant_nonneg_margin(p)) < 1e-12) continue;
      if (circulant_is_nonneg(p) != oracle::direct_region_eval(s, t)) ++disagreements;
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("g-function criterion: s >= sqrt(3) t iff gamma3(s/c, t/c) >= 0 for all c") {
  auto holds_for_all_c = [](double s, double t) {
    for (int c = 1; c <= 10000; ++c) {
      if (circulant_gamma(CirculantParams(s / c, t / c))[2] < 0.0) return false;
    }
    return true;
  };
  const double root3 = std::sqrt(3.0);
  for (double t : {0.05, 0.3, 1.0, 2.0, 3.0}) {
    CHECK(holds_for_all_c(root3 * t * 1.01, t));
    CHECK_FALSE(holds_for_all_c(root3 * t * 0.95, t));
  }
}

TEST_CASE("negation symmetry of sampled P+") {
  for (double s : {0.1, 0.35, 0.6}) {
    for (double t : {0.2, 1.0, 2.0, 2.9}) {
      if (!circulant_is_nonneg(CirculantParams(s, t))) continue;
      const auto a = circulant_sample_p_plus(CirculantParams(s, t), 20);
      const auto b = circulant_sample_p_plus(CirculantParams(s, -t), 20);
      CHECK(a.members == b.members);
    }
  }
}

TEST_CASE("classification flags") {
  SUBCASE("I3 region") {
    const auto c = circulant_classify(CirculantParams(2.0, 0.1));
    CHECK(c.i3_limit);
    CHECK(c.c3_sufficient);
    CHECK(c.c3sq_sufficient);
    CHECK(c.report.kind == DivisibilityKind::all_n);
  }
  SUBCASE("C3 itself") {
    const auto c = circulant_classify(CirculantParams(0.0, -kThird));
    CHECK_FALSE(c.i3_limit);
    CHECK(c.c3_sufficient);
    CHECK_FALSE(c.c3sq_sufficient);
    CHECK(c.report.kind == DivisibilityKind::superset_cp);
    CHECK(c.report.cp_modulus == 3);
    CHECK(c.report.members == std::vector<int>{1, 2, 4, 5, 7, 8, 10, 11});
  }
  SUBCASE("C3^2 region only") {
    const auto c = circulant_classify(CirculantParams(0.3, 2.0));
    CHECK_FALSE(c.i3_limit);
    CHECK_FALSE(c.c3_sufficient);
    CHECK(c.c3sq_sufficient);
  }
  SUBCASE("outside every sufficient region") {
    const CirculantParams p(0.4, 0.3);
    REQUIRE(circulant_is_nonneg(p));
    const auto c = circulant_classify(p);
    CHECK_FALSE(c.i3_limit);
    CHECK_FALSE(c.c3_sufficient);
    CHECK_FALSE(c.c3sq_sufficient);
    CHECK(c.report.kind == DivisibilityKind::sampled);
    CHECK(c.report.undetermined);
  }
  SUBCASE("boundary point on the C3^2 ray") {
    const auto c = circulant_classify(CirculantParams(0.1, kThird));
    CHECK(c.c3sq_sufficient);
  }
  CHECK_THROWS_AS(circulant_classify(CirculantParams(0.0, kPi / 6.0)), Error);
}

TEST_CASE("sampled members carry stochastic witnesses") {
  const CirculantParams p(0.4, 0.3);
  const auto r = circulant_sample_p_plus(p, 12);
  const RealMatrix a = circulant_realize(p);
  for (const auto& [c, w] : r.witnesses) {
    CHECK(StochasticMatrix::try_from(w).has_value());
    CHECK(dist(matrix_power(w, static_cast<unsigned>(c)), a) < 1e-12);
  }
}

TEST_CASE("parameters from a matrix") {
  auto read = [](const RealMatrix& m) { return circulant_from_matrix(StochasticMatrix::from(m)); };
  const CirculantParams i3 = read(RealMatrix(RealMatrix::Identity(3, 3)));
  CHECK(i3.s == doctest::Approx(0.0));
  CHECK(i3.t == doctest::Approx(0.0));
  const CirculantParams cyc = read(c3());
  CHECK(cyc.s == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(cyc.t == doctest::Approx(-kThird));
  const CirculantParams l2 = read(circulant_realize(CirculantParams(std::log(2.0), 0.0)));
  CHECK(l2.s == doctest::Approx(std::log(2.0)));
  CHECK(l2.t == doctest::Approx(0.0));
  for (double t : {-3.0, -1.2, 0.4, 2.2, kPi}) {
    const CirculantParams p(1.0, t);
    const RealMatrix back = circulant_realize(read(circulant_realize(p)));
    CHECK(dist(back, circulant_realize(p)) < 1e-10);
  }
  CHECK_THROWS_AS(read(RealMatrix(RealMatrix::Constant(3, 3, 1.0 / 3.0))), Error);
  RealMatrix nc(3, 3);
  nc << 0.5, 0.5, 0, 0.5, 0.5, 0, 0, 0, 1;
  CHECK_THROWS_AS(read(nc), Error);
}
