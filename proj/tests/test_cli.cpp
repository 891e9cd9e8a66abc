#include <filesystem>
#include <numbers>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "kagome/dataset_io.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  json out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = kagome::cli::run(args, out, err);
  json parsed = out.str().empty() ? json() : json::parse(out.str());
  return {code, parsed, err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "kagome_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("omega parsing") {
  CHECK(kagome::cli::parse_omega("pi8") == doctest::Approx(std::numbers::pi / 8));
  CHECK(kagome::cli::parse_omega("0.5") == 0.5);
  CHECK_THROWS_AS(kagome::cli::parse_omega("half"), std::invalid_argument);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == kagome::cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == kagome::cli::kExitUsage);
  CHECK(run({"bands", "--model", "foo", "--p", "0", "--q", "1"}).code == kagome::cli::kExitUsage);
  CHECK(run({"bands", "--model", "kagome", "--p", "2", "--q", "4"}).code == kagome::cli::kExitUsage);
  CHECK(run({"verify", "oracle", "--p", "1", "--q", "3", "--L1", "4"}).code == kagome::cli::kExitUsage);
}

TEST_CASE("bands summary") {
  auto r = run({"bands", "--model", "kagome", "--p", "0", "--q", "1", "--grid", "12", "--threads", "1"});
  CHECK(r.code == kagome::cli::kExitOk);
  CHECK(r.out["bands"].size() == 3);
  CHECK(r.out["flat_bands"][0]["value"].get<double>() == doctest::Approx(-2.0));
}

TEST_CASE("verify subcommands pass") {
  CHECK(run({"verify", "symbol", "--samples", "50"}).code == kagome::cli::kExitOk);
  auto o = run({"verify", "oracle", "--p", "3", "--q", "2", "--omega", "pi8"});
  CHECK(o.code == kagome::cli::kExitOk);
  CHECK(o.out["deviation"].get<double>() < 1e-9);
  auto c = run({"verify", "oracle", "--p", "3", "--q", "2", "--omega", "pi8", "--calibrate"});
  CHECK(c.code == kagome::cli::kExitOk);
  auto s = run({"verify", "symmetries", "--model", "hexagonal", "--flux", "1/3,-1/4", "--grid", "12"});
  CHECK(s.code == kagome::cli::kExitOk);
  CHECK(run({"verify", "factorizations", "--samples", "10"}).code == kagome::cli::kExitOk);
}

TEST_CASE("butterfly writes CSV, JSON and SVG") {
  auto csv = scratch("bf.csv"), js = scratch("bf.json"), svg = scratch("bf.svg");
  auto r = run({"butterfly", "--model", "kagome", "--qmax", "2", "--grid", "6", "--threads", "2", "--out",
                csv.string(), "--svg", svg.string()});
  CHECK(r.code == kagome::cli::kExitOk);
  CHECK(r.out["reflection"]["passed"].get<bool>());
  CHECK(std::filesystem::exists(svg));
  auto ds = kagome::import_csv(csv);
  CHECK(ds.rows.size() == 8 * 3 + 8 * 6);

  CHECK(run({"butterfly", "--model", "kagome", "--qmax", "2", "--grid", "6", "--out", js.string()}).code == 0);
  CHECK(kagome::import_json(js).rows == ds.rows);
}

TEST_CASE("unwritable output is an error") {
  auto r = run({"butterfly", "--model", "square", "--qmax", "1", "--out", "/nonexistent/dir/x.csv"});
  CHECK(r.code != kagome::cli::kExitOk);
  CHECK(!r.err.empty());
}
