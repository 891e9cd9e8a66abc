#include <numbers>
#include <tuple>
#include <stdexcept>

#include "doctest.h"
#include "kagome/oracle.hpp"

using namespace kagome;

TEST_CASE("truncated operator shape and validation") {
  auto op = build_truncated(ReducedFlux(1, 3), 0.0, 6, 4);
  CHECK(op.matrix.dim() == 72);
  CHECK_THROWS_AS(build_truncated(ReducedFlux(1, 3), 0.0, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_truncated(ReducedFlux(0, 1), 0.0, 1, 4), std::invalid_argument);
}

TEST_CASE("phase grid size and range") {
  auto g = phase_grid(ReducedFlux(2, 3), 6, 4, kFrozenPhaseGrid);
  CHECK(g.size() == 8);
  for (const auto& ph : g) {
    CHECK(ph.theta1() >= 0.0);
    CHECK(ph.theta1() < 1.0);
  }
}

TEST_CASE("isospectrality on the acceptance grid") {
  for (auto [p, q] : {std::pair{0L, 1L}, {1L, 3L}, {2L, 3L}, {3L, 2L}})
    for (double omega : {0.0, std::numbers::pi / 8}) {
      auto r = isospectrality_check(ReducedFlux(p, q), omega, 2 * q, 4);
      CAPTURE(p);
      CAPTURE(q);
      CHECK(r.passed);
      CHECK(r.deviation < kOracleTolerance);
      CHECK(r.size == static_cast<std::size_t>(24 * q));
      CHECK(r.max_abs_eigenvalue <= 4.0 + 1e-12);
    }
}

TEST_CASE("larger and negative fluxes") {
  for (auto [p, q, L1, L2] : {std::tuple{-1L, 4L, 8, 3}, {5L, 7L, 7, 5}, {-7L, 3L, 6, 5}}) {
    auto r = isospectrality_check(ReducedFlux(p, q), 0.3, L1, L2);
    CHECK(r.deviation < kOracleTolerance);
  }
}

TEST_CASE("calibration selects the frozen convention and rejects the scaled one") {
  auto entries = calibrate_phase_grid(ReducedFlux(3, 2), std::numbers::pi / 8, 4, 4);
  REQUIRE(entries.size() == 8);
  CHECK(entries.front().deviation < 1e-12);
  bool frozen_best = false;
  for (const auto& e : entries) {
    if (e.convention == kFrozenPhaseGrid) frozen_best = e.deviation < 1e-12;
    if (e.convention.theta1_scaled_by_q) CHECK(e.deviation > 0.1);
  }
  CHECK(frozen_best);
}
