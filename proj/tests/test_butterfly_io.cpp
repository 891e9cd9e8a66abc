#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "doctest.h"
#include "kagome/butterfly.hpp"
#include "kagome/dataset_io.hpp"
#include "kagome/svg.hpp"

using namespace kagome;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "kagome_io_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("sweep fractions") {
  auto f = sweep_fractions(Model::kagome, 2);
  // q = 1: p = 0..7; q = 2: odd p in 1..15
  CHECK(f.size() == 16);
  CHECK(f.front() == ReducedFlux(0, 1));
  CHECK(f.back() == ReducedFlux(15, 2));
  CHECK(sweep_fractions(Model::square, 3).size() == 1 + 1 + 2);  // 0/1; 1/2; 1/3, 2/3
  CHECK_THROWS_AS(sweep(Model::kagome, 0.0, {.qmax = 0}), std::invalid_argument);
  CHECK_THROWS_AS(sweep(Model::kagome, 0.0, {.qmax = 1, .grid = 1}), std::invalid_argument);
  CHECK_THROWS_AS(sweep(Model::kagome, 0.0, {.qmax = 1, .threads = 0}), std::invalid_argument);
}

TEST_CASE("qmax 1 kagome dataset") {
  auto ds = sweep(Model::kagome, 0.0, {.qmax = 1, .grid = 12});
  CHECK(ds.rows.size() == 24);
  CHECK(ds.manifest.qmax == 1);
  CHECK(ds.manifest.period == 8);
  CHECK(ds.manifest.tool_version == kToolVersion);

  auto csv = to_csv(ds);
  CHECK(count(csv, "\n") == 25);
  CHECK(csv.rfind("model,p,q,gamma_over_2pi,omega,band_index,band_lo,band_hi\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);

  auto rep = reflection_smoke_test(ds);
  CHECK(rep.passed);
  CHECK(rep.fractions_checked == 8);
}

TEST_CASE("bands per flux value") {
  auto ds = sweep(Model::kagome, 0.0, {.qmax = 4, .grid = 6});
  std::map<std::pair<long, long>, int> per;
  for (const auto& r : ds.rows) ++per[{r.p, r.q}];
  CHECK(per.size() == sweep_fractions(Model::kagome, 4).size());
  for (const auto& [pq, n] : per) CHECK(n == 3 * pq.second);
  CHECK(std::is_sorted(ds.rows.begin(), ds.rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.q, a.p, a.band_index) < std::tie(b.q, b.p, b.band_index);
  }));
}

TEST_CASE("CSV and JSON round trips are exact") {
  auto ds = sweep(Model::kagome, 0.25, {.qmax = 3, .grid = 6});
  ds.manifest.timestamp = "2026-01-01T00:00:00Z";

  auto back = from_csv(to_csv(ds));
  CHECK(back.model == ds.model);
  CHECK(back.omega == ds.omega);
  CHECK(back.rows == ds.rows);

  auto jback = from_json(to_json(ds));
  CHECK(jback.rows == ds.rows);
  CHECK(jback.omega == ds.omega);
  CHECK(jback.manifest.qmax == 3);
  CHECK(jback.manifest.timestamp == ds.manifest.timestamp);
  CHECK(to_json(jback) == to_json(ds));

  export_csv(ds, scratch("rt.csv"));
  export_json(ds, scratch("rt.json"));
  CHECK(import_csv(scratch("rt.csv")).rows == ds.rows);
  CHECK(import_json(scratch("rt.json")).rows == ds.rows);
}

TEST_CASE("format_real keeps 17 significant digits") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(-2.0) == "-2");
  CHECK(std::stod(format_real(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(from_csv("model,p\nkagome,1\n"), std::runtime_error);
  CHECK_THROWS_AS(from_csv(""), std::runtime_error);
  CHECK_THROWS(from_json("{\"rows\": 3}"));
  CHECK_THROWS_AS(read_text_file("/nonexistent/dir/file.csv"), std::runtime_error);
  CHECK_THROWS_AS(write_text_file("/nonexistent/dir/file.csv", "x"), std::runtime_error);
}

TEST_CASE("sweep is identical across thread counts") {
  auto one = sweep(Model::kagome, 0.0, {.qmax = 6, .grid = 8, .threads = 1});
  auto eight = sweep(Model::kagome, 0.0, {.qmax = 6, .grid = 8, .threads = 8});
  CHECK(one.rows == eight.rows);
  CHECK(to_csv(one) == to_csv(eight));
}

TEST_CASE("SVG has one segment per row and the four flat dots") {
  auto ds = sweep(Model::kagome, 0.0, {.qmax = 1, .grid = 12});
  auto svg = svg_string(ds);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count(svg, "<line class=\"band\"") == ds.rows.size());

  std::regex circle(R"re(<circle class="flat" cx="([-0-9.]+)" cy="([-0-9.]+)")re");
  std::vector<std::pair<double, double>> dots;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), circle); it != std::sregex_iterator(); ++it)
    dots.emplace_back(std::stod((*it)[1]), std::stod((*it)[2]));
  REQUIRE(dots.size() == 4);
  // expected (gamma/2pi, energy): (0,-2), (2,0), (4,2), (6,0); check through the affine map
  const double flux[] = {0, 2, 4, 6}, energy[] = {-2, 0, 2, 0};
  double sx = (dots[1].first - dots[0].first) / 2.0;
  double sy = (dots[2].second - dots[1].second) / 2.0;
  CHECK(sy < 0.0);
  for (int i = 0; i < 4; ++i) {
    CHECK(dots[i].first == doctest::Approx(dots[0].first + sx * flux[i]));
    CHECK(dots[i].second == doctest::Approx(dots[1].second + sy * energy[i]));
  }

  CHECK(count(svg_string(ds, {.flat_highlight = false}), "<circle") == 0);
  auto t = svg_string(ds, {.transpose = true});
  CHECK(count(t, "<line class=\"band\"") == ds.rows.size());

  render_svg(ds, scratch("bf.svg"));
  CHECK(read_text_file(scratch("bf.svg")) == svg);
  CHECK_THROWS_AS(svg_string(ButterflyDataset{}), std::invalid_argument);
}

TEST_CASE("reflection test rejects non-kagome datasets") {
  auto ds = sweep(Model::square, 0.0, {.qmax = 2, .grid = 4});
  CHECK_THROWS(reflection_smoke_test(ds));
}

TEST_CASE("timestamp format") {
  std::regex iso(R"(\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}Z)");
  CHECK(std::regex_match(utc_timestamp(), iso));
}
