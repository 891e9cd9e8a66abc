#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>
#include <stdexcept>

#include "doctest.h"
#include "kagome/eigensolver.hpp"
#include "kagome/spectra.hpp"

using namespace kagome;

TEST_CASE("merge_intervals") {
  auto m = merge_intervals({{2, 3}, {0, 1}, {1 + 1e-12, 1.5}, {2.5, 2.7}});
  REQUIRE(m.size() == 2);
  CHECK(m[0] == Interval{0, 1.5});
  CHECK(m[1] == Interval{2, 3});
  CHECK(merge_intervals({{0, 1}, {1.1, 2}}).size() == 2);
  CHECK(merge_intervals({}).empty());
}

TEST_CASE("negate and Hausdorff distance") {
  std::vector<Interval> a{{-1, 0}, {2, 3}};
  auto n = negate(a);
  CHECK(n == std::vector<Interval>{{-3, -2}, {0, 1}});
  CHECK(hausdorff_distance(a, a) == 0.0);
  CHECK(hausdorff_distance({{0, 1}}, {{0, 1.5}}) == doctest::Approx(0.5));
  // filling a gap: gap midpoint is 1 away from the nearest point of a
  CHECK(hausdorff_distance({{0, 1}, {3, 4}}, {{0, 4}}) == doctest::Approx(1.0));
  CHECK(hausdorff_distance({{0, 0}}, {{5, 5}}) == doctest::Approx(5.0));
}

TEST_CASE("band counts and ordering") {
  for (Model m : {Model::square, Model::triangular, Model::hexagonal, Model::kagome})
    for (auto [p, q] : {std::pair{0L, 1L}, {1L, 3L}, {-2L, 5L}}) {
      auto s = band_spectrum(m, ReducedFlux(p, q), 0.0, {.grid = 12});
      REQUIRE(s.bands.size() == static_cast<std::size_t>(block_count(m) * q));
      for (std::size_t k = 0; k < s.bands.size(); ++k) {
        CHECK(s.bands[k].index == static_cast<int>(k) + 1);
        CHECK(s.bands[k].lo <= s.bands[k].hi);
        if (k > 0) CHECK(s.bands[k].lo >= s.bands[k - 1].lo);
        CHECK(std::abs(s.bands[k].lo) <= range_bound(m) + 1e-12);
        CHECK(std::abs(s.bands[k].hi) <= range_bound(m) + 1e-12);
      }
      CHECK(!s.merged.empty());
    }
}

TEST_CASE("periodicity reduction gives the same bands as the full grid") {
  for (Model m : {Model::triangular, Model::kagome})
    for (auto [p, q, g] : {std::tuple{1L, 3L, 12}, {2L, 5L, 10}, {1L, 4L, 6}, {3L, 4L, 9}}) {
      auto fast = band_spectrum(m, ReducedFlux(p, q), 0.1, {.grid = g, .use_periodicity = true});
      auto full = band_spectrum(m, ReducedFlux(p, q), 0.1, {.grid = g, .use_periodicity = false});
      for (std::size_t k = 0; k < fast.bands.size(); ++k) {
        CHECK(std::abs(fast.bands[k].lo - full.bands[k].lo) < 1e-12);
        CHECK(std::abs(fast.bands[k].hi - full.bands[k].hi) < 1e-12);
      }
    }
}

TEST_CASE("thread count does not change the result") {
  auto a = band_spectrum(Model::kagome, ReducedFlux(2, 7), 0.0, {.grid = 14, .threads = 1});
  auto b = band_spectrum(Model::kagome, ReducedFlux(2, 7), 0.0, {.grid = 14, .threads = 3});
  for (std::size_t k = 0; k < a.bands.size(); ++k) {
    CHECK(a.bands[k].lo == b.bands[k].lo);
    CHECK(a.bands[k].hi == b.bands[k].hi);
    CHECK(a.bands[k].stddev == b.bands[k].stddev);
  }
}

TEST_CASE("band edges are Lipschitz in theta") {
  // eigenvalues move by at most ||dM|| <= sum of hop magnitudes * 2 pi dtheta
  auto coarse = band_spectrum(Model::kagome, ReducedFlux(1, 2), 0.0, {.grid = 20});
  auto fine = band_spectrum(Model::kagome, ReducedFlux(1, 2), 0.0, {.grid = 60});
  double lipschitz = 2 * std::numbers::pi * 8.0;
  for (std::size_t k = 0; k < coarse.bands.size(); ++k) {
    CHECK(fine.bands[k].lo <= coarse.bands[k].lo + 1e-12);
    CHECK(fine.bands[k].hi >= coarse.bands[k].hi - 1e-12);
    CHECK(coarse.bands[k].lo - fine.bands[k].lo <= lipschitz * std::sqrt(2.0) / 20);
  }
}

TEST_CASE("refinement only widens bands") {
  auto plain = band_spectrum(Model::square, ReducedFlux(1, 3), 0.0, {.grid = 8});
  auto refined = band_spectrum(Model::square, ReducedFlux(1, 3), 0.0, {.grid = 8, .refine = true});
  for (std::size_t k = 0; k < plain.bands.size(); ++k) {
    CHECK(refined.bands[k].lo <= plain.bands[k].lo + 1e-15);
    CHECK(refined.bands[k].hi >= plain.bands[k].hi - 1e-15);
  }
}

TEST_CASE("hexagonal spectrum is symmetric about zero") {
  for (auto [p, q] : {std::pair{0L, 1L}, {1L, 3L}, {2L, 5L}}) {
    auto s = band_spectrum(Model::hexagonal, ReducedFlux(p, q), 0.0, {.grid = 12});
    CHECK(hausdorff_distance(s.merged, negate(s.merged)) < 1e-12);
  }
}

TEST_CASE("zero-flux square band is [-2, 2]") {
  auto s = band_spectrum(Model::square, ReducedFlux(0, 1), 0.0, {.grid = 60});
  REQUIRE(s.merged.size() == 1);
  CHECK(s.merged[0].lo == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(s.merged[0].hi == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("flat band detection") {
  auto s = band_spectrum(Model::kagome, ReducedFlux(0, 1), 0.0, {.grid = 12});
  auto flats = detect_flat_bands(s);
  REQUIRE(flats.size() == 1);
  CHECK(flats[0].value == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(flats[0].multiplicity == 1);
  CHECK(detect_flat_bands(band_spectrum(Model::square, ReducedFlux(0, 1), 0.0, {.grid = 8})).empty());
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(band_spectrum(Model::kagome, ReducedFlux(0, 1), 0.0, {.grid = 1}), std::invalid_argument);
  CHECK_THROWS_AS(band_spectrum(Model::kagome, ReducedFlux(0, 1), 0.0, {.grid = 4, .threads = 0}),
                  std::invalid_argument);
}
