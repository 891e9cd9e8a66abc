#include <cmath>

#include "doctest.h"
#include "kagome/symbol.hpp"

using namespace kagome;

TEST_CASE("kagome symbol identities hold over random samples") {
  auto r = verify_symbol_symmetries(1000, 42);
  CHECK(r.translation_x < 1e-12);
  CHECK(r.translation_xi < 1e-12);
  CHECK(r.rotation < 1e-12);
  CHECK(r.conjugation < 1e-12);
  CHECK(r.hermiticity < 1e-12);
}

TEST_CASE("perturbing omega breaks the rotation and conjugation identities") {
  auto r = verify_symbol_symmetries(200, 1, 0.05);
  CHECK(r.rotation > 1e-3);
  CHECK(r.conjugation > 1e-3);
}

TEST_CASE("scalar symbols") {
  CHECK(symbol(Model::square, 0.0, 0.0)(0, 0).real() == doctest::Approx(2.0));
  CHECK(symbol(Model::triangular, 0.0, 0.0)(0, 0).real() == doctest::Approx(3.0));
  auto h = symbol(Model::hexagonal, 0.0, 0.0);
  CHECK(h.dim() == 2);
  CHECK(h(0, 1).real() == doctest::Approx(3.0));
}

TEST_CASE("kagome symbol at the origin with zero flux") {
  auto k = symbol(Model::kagome, 0.0, 0.0, 0.0, 0.0);
  CHECK(k.dim() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(k(i, i)) == 0.0);
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(std::abs(k(i, j) - Complex(2.0, 0.0)) < 1e-15);
  }
}

TEST_CASE("invalid sample count") { CHECK_THROWS(verify_symbol_symmetries(0)); }
