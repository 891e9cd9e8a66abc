#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "kagome/symmetry.hpp"

using namespace kagome;

TEST_CASE("registry ids are unique") {
  std::set<std::string_view> ids;
  for (const auto& r : symmetry_relations()) CHECK(ids.insert(r.id).second);
  CHECK(ids.size() == symmetry_relations().size());
  CHECK_THROWS_AS(find_relation("no-such-relation"), std::invalid_argument);
}

TEST_CASE("every relation holds on five fluxes including negative p") {
  const ReducedFlux fluxes[] = {{1, 3}, {2, 5}, {-1, 4}, {3, 7}, {-5, 6}};
  for (const auto& r : symmetry_relations()) {
    for (const auto& f : fluxes) {
      auto res = check_symmetry(r.id, f, 0.13, 18);
      CAPTURE(std::string(r.id));
      CAPTURE(f.p());
      CAPTURE(f.q());
      CHECK(res.passed);
      CHECK(res.distance < kSymmetryTolerance);
    }
  }
}

TEST_CASE("fixed-omega relations override the requested omega") {
  for (const auto& r : symmetry_relations()) {
    if (!r.fixed_omega) continue;
    auto res = check_symmetry(r.id, ReducedFlux(1, 3), 0.4, 8);
    CHECK(res.omega == *r.fixed_omega);
  }
}

TEST_CASE("a wrong partner is detected") {
  // sigma at 1/3 is not sigma at 1/3 + 1 for kagome: period is 8
  auto a = band_spectrum(Model::kagome, ReducedFlux(1, 3), 0.0, {.grid = 18});
  auto b = band_spectrum(Model::kagome, ReducedFlux(4, 3), 0.0, {.grid = 18});
  CHECK(hausdorff_distance(a.merged, b.merged) > 1e-3);
}
