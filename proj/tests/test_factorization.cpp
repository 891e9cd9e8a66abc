#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "kagome/bloch.hpp"
#include "kagome/factorization.hpp"

using namespace kagome;

TEST_CASE("catalog has the eight closed-form cases") {
  CHECK(factorization_cases().size() == 8);
  CHECK_THROWS_AS(find_factorization_case("9,9,0"), std::invalid_argument);
  CHECK(ptri(0.0, 0.0) == doctest::Approx(3.0));
}

TEST_CASE("factorizations hold at random samples") {
  for (const auto& c : factorization_cases()) {
    auto r = verify_factorization(c.id, 100, 17);
    CAPTURE(std::string(c.id));
    CHECK(r.passed);
    CHECK(r.max_relative_deviation < kFactorizationTolerance);
    CHECK(r.max_abs_eigenvalue <= 4.0 + 1e-12);
  }
}

TEST_CASE("factorizations agree with an LU determinant") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& c : factorization_cases()) {
    for (int s = 0; s < 5; ++s) {
      double t1 = u(rng), t2 = u(rng), lambda = 10 * u(rng) - 5;
      auto M = kagome_bloch(ReducedFlux(c.p, c.q), c.omega, BlochPhase(t1, t2));
      const std::size_t n = M.dim();
      Eigen::MatrixXcd a(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j ? lambda : 0.0) - M(i, j);
      double det = a.partialPivLu().determinant().real();
      double rhs = factorization_rhs(c, lambda, t1, t2);
      CHECK(std::abs(det - rhs) <= 1e-7 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("a perturbed omega breaks the identity") {
  const auto& c = find_factorization_case("2,3,0");
  auto shifted = c;
  shifted.omega = 0.05;
  double d = 0.0;
  for (double lambda : {-1.0, 0.5, 2.0}) d = std::max(d, std::abs(factorization_deviation(shifted, lambda, 0.2, 0.3)));
  CHECK(d > 1e-3);
}

TEST_CASE("flat band cases") {
  for (const auto& c : factorization_cases()) {
    auto r = verify_flat_band_case(c, 60);
    CAPTURE(std::string(c.id));
    CHECK(r.passed);
    REQUIRE(r.detected.size() == 1);
    CHECK(r.detected[0].multiplicity == c.flat_multiplicity);
    CHECK(r.value_error < kFlatValueTolerance);
    CHECK(r.max_width < kFlatWidthTolerance);
  }
}
