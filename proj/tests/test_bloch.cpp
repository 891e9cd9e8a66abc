#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "kagome/bloch.hpp"
#include "kagome/eigensolver.hpp"
#include "kagome/symbol.hpp"

using namespace kagome;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double max_eigen_difference(const HermitianMatrix& a, const HermitianMatrix& b) {
  auto ea = eigenvalues(a), eb = eigenvalues(b);
  double d = 0.0;
  for (std::size_t i = 0; i < ea.size(); ++i) d = std::max(d, std::abs(ea[i] - eb[i]));
  return d;
}

}  // namespace

TEST_CASE("clock and shift commutation") {
  for (auto [p, q] : {std::pair{1L, 3L}, {2L, 5L}, {-3L, 7L}, {5L, 6L}}) {
    auto K = shift_matrix(q);
    auto J = clock_matrix(p, q);
    auto lhs = J * K;
    auto rhs = root_of_unity(-p, q) * (K * J);
    CHECK(max_abs_difference(lhs, rhs) < 1e-14);
    CHECK(K(0, 1 % q) == Complex(1.0, 0.0));
    CHECK(std::abs(J(1, 1) - root_of_unity(p, q)) < 1e-15);
  }
  CHECK_THROWS_AS(clock_matrix(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(shift_matrix(0), std::invalid_argument);
}

TEST_CASE("monomial algebra agrees with dense products") {
  ReducedFlux f(2, 5);
  auto K = monomial_shift(5);
  auto J = monomial_clock(f);
  CHECK(max_abs_difference((K * J).dense(), K.dense() * J.dense()) < 1e-15);
  CHECK(max_abs_difference(adjoint(K * J).dense(), (K.dense() * J.dense()).adjoint()) < 1e-15);
  CHECK(max_abs_difference((monomial_identity(5) * J).dense(), J.dense()) == 0.0);
}

TEST_CASE("dimensions and Hermiticity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (Model m : {Model::square, Model::triangular, Model::hexagonal, Model::kagome})
    for (auto [p, q] : {std::pair{0L, 1L}, {1L, 2L}, {1L, 3L}, {-2L, 5L}, {5L, 7L}}) {
      BlochFamily fam(m, ReducedFlux(p, q), 0.3);
      CHECK(fam.dim() == static_cast<std::size_t>(block_count(m) * q));
      for (int s = 0; s < 5; ++s) {
        auto M = fam(BlochPhase(u(rng), u(rng)));
        CHECK(M.dim() == fam.dim());
        CHECK(hermiticity_defect(M.matrix()) < 1e-14);
        for (double ev : eigenvalues(M)) CHECK(std::abs(ev) <= range_bound(m) + 1e-12);
      }
    }
}

TEST_CASE("single-cell families are isospectral with the symbols") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (Model m : {Model::square, Model::triangular, Model::hexagonal, Model::kagome})
    for (int s = 0; s < 20; ++s) {
      double t1 = u(rng), t2 = u(rng), omega = 2 * u(rng) - 1;
      auto M = bloch_matrix(m, ReducedFlux(0, 1), omega, BlochPhase(t1, t2));
      auto S = symbol(m, kTwoPi * t1, -kTwoPi * t2, 0.0, omega);
      CHECK(max_eigen_difference(M, HermitianMatrix(S)) < 1e-13);
    }
}

TEST_CASE("kagome family at even integer flux is isospectral with the symbol") {
  // odd p picks up the extra sign exp(-i pi p) on the K J hop
  for (long p = -4; p <= 8; p += 2) {
    auto M = kagome_bloch(ReducedFlux(p, 1), 0.2, BlochPhase(0.13, 0.71));
    auto S = symbol(Model::kagome, kTwoPi * 0.13, -kTwoPi * 0.71, kTwoPi * p, 0.2);
    CHECK(max_eigen_difference(M, HermitianMatrix(S)) < 1e-13);
  }
}

TEST_CASE("spectrum is periodic in theta with period 1/q") {
  for (Model m : {Model::square, Model::triangular, Model::hexagonal, Model::kagome}) {
    ReducedFlux f(2, 5);
    BlochFamily fam(m, f, 0.1);
    auto base = fam(BlochPhase(0.07, 0.33));
    CHECK(max_eigen_difference(base, fam(BlochPhase(0.07 + 0.2, 0.33))) < 1e-12);
    CHECK(max_eigen_difference(base, fam(BlochPhase(0.07, 0.33 + 0.4))) < 1e-12);
  }
}

TEST_CASE("assemble_into reuses and resizes the output") {
  BlochFamily fam(Model::kagome, ReducedFlux(1, 3), 0.0);
  ComplexMatrix out(2);
  fam.assemble_into(BlochPhase(0.2, 0.4), out);
  CHECK(out.dim() == 9);
  CHECK(max_abs_difference(out, fam(BlochPhase(0.2, 0.4)).matrix()) == 0.0);
}

TEST_CASE("non-Hermitian input is rejected") {
  ComplexMatrix a(2);
  a(0, 1) = Complex(1.0, 0.0);
  CHECK_THROWS_AS(HermitianMatrix{a}, std::invalid_argument);
}

TEST_CASE("flux and phase validation") {
  CHECK_THROWS_AS(ReducedFlux(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(ReducedFlux(1, 0), std::invalid_argument);
  CHECK(ReducedFlux::reduced(2, -4) == ReducedFlux(-1, 2));
  CHECK_THROWS_AS(BlochPhase(1.0, 0.0), std::invalid_argument);
  CHECK(BlochPhase::wrapped(1.25, -0.25).theta1() == doctest::Approx(0.25));
  CHECK(BlochPhase::wrapped(1.25, -0.25).theta2() == doctest::Approx(0.75));
  CHECK_THROWS_AS(parse_model("honeycomb"), std::invalid_argument);
  CHECK(parse_model("kagome") == Model::kagome);
}
