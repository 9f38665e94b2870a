// Copyright 2026 The sepcrit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sepcrit/io.hpp"
#include "test_support.hpp"

using namespace sepcrit;
using nlohmann::json;

namespace {

std::string error_of(const std::string& text) {
  try {
    io::parse_state(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("parse a pure Bell state") {
  const auto loaded = io::parse_state(R"({
    "schema": "sepcrit.state", "version": 1, "dims": [2, 2], "kind": "pure",
    "data": [[0.7071067811865476, 0], [0, 0], [0, 0], [0.7071067811865476, 0]],
    "metadata": {"name": "bell", "seed": 3}
  })");
  const auto& psi = std::get<PureState>(loaded.state);
  CHECK((psi.amplitudes() - zoo::bell().amplitudes()).norm() < 1e-15);
  CHECK(loaded.metadata.name == std::optional<std::string>("bell"));
  CHECK(loaded.metadata.seed == std::optional<std::uint64_t>(3));
  CHECK(loaded.warnings.empty());
}

TEST_CASE("unnormalized pure input is renormalized with a warning") {
  const auto loaded =
      io::parse_state(R"({"dims": [2, 2], "kind": "pure", "data": [[1,0],[0,0],[0,0],[1,0]]})");
  CHECK(std::abs(std::get<PureState>(loaded.state).amplitudes().norm() - 1.0) < 1e-15);
  CHECK(loaded.warnings.size() == 1);
}

TEST_CASE("parse errors name the offending element") {
  const auto len = error_of(R"({"dims": [2, 2], "kind": "pure", "data": [[1,0],[0,0],[0,0]]})");
  CHECK(len.find('4') != std::string::npos);

  const auto pair = error_of(R"({"dims": [2, 2], "kind": "pure", "data": [[1,0],[0,0],[0],[0,0]]})");
  CHECK(pair.find("data[2]") != std::string::npos);

  CHECK(error_of(R"({"dims": [2, "x"], "kind": "pure", "data": []})").find("dims[1]") !=
        std::string::npos);
  CHECK_FALSE(error_of(R"({"dims": [2, 2], "kind": "pure", "data": [[1,0],)").empty());
  CHECK_FALSE(error_of(R"({"dims": [2, 2], "kind": "other", "data": []})").empty());
  CHECK_FALSE(
      error_of(R"({"schema": "x", "dims": [2, 2], "kind": "pure", "data": [[1,0],[0,0],[0,0],[0,0]]})")
          .empty());
}

TEST_CASE("mixed input with a bad trace is rejected") {
  json j;
  j["dims"] = {2, 2};
  j["kind"] = "mixed";
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back({r == c ? 0.245 : 0.0, 0.0});
    rows.push_back(row);
  }
  j["data"] = rows;
  const auto msg = error_of(j.dump());
  CHECK(msg.find("trace") != std::string::npos);
}

TEST_CASE("state files round trip") {
  auto rng = testing::rng_for(401);
  const SubsystemDims dims({2, 3});
  const auto psi = zoo::haar_pure(dims, rng);
  const auto rho = zoo::ginibre_mixed(dims, 3, rng);

  const auto back_pure = io::parse_state(io::write_state(psi, {.name = "x", .seed = 5}));
  CHECK((std::get<PureState>(back_pure.state).amplitudes() - psi.amplitudes()).norm() < 1e-15);
  CHECK(back_pure.metadata.seed == std::optional<std::uint64_t>(5));

  const auto back_mixed = io::parse_state(io::write_state(rho));
  CHECK((std::get<DensityMatrix>(back_mixed.state).matrix() - rho.matrix()).norm() < 1e-15);

  const auto path = std::filesystem::temp_directory_path() / "sepcrit_io_roundtrip.json";
  std::ofstream(path) << io::write_state(rho);
  CHECK(std::get<DensityMatrix>(io::read_state(path).state).matrix() == rho.matrix());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(io::read_state(path), Error);
}

TEST_CASE("pure reports") {
  const auto fam = enumerate_family(SubsystemDims({2, 2, 2}));
  const auto report = c_pure(zoo::ghz(fam.dims), fam);
  const io::ReportContext ctx{.state_id = "ghz", .dims = "2x2x2"};

  const auto j = json::parse(io::write_report(report, ctx, io::Format::Json));
  CHECK(j["value"].get<double>() == report.total);
  CHECK(std::abs(j["value"].get<double>() - 1.0) < 1e-12);
  CHECK(j["verdict"] == "entangled");
  CHECK(j["per_operator"].size() == 6);
  CHECK(j["per_operator"][5]["operator"] == fam.operators[5].tag());

  const auto text = io::write_report(report, ctx, io::Format::Text);
  CHECK(text.find("operator") != std::string::npos);
  for (const auto& op : fam.operators) CHECK(text.find(op.tag()) != std::string::npos);
  CHECK(text.find("entangled") != std::string::npos);
}

TEST_CASE("mixed reports are lossless") {
  const auto fam = enumerate_family(SubsystemDims({2, 2}));
  const auto report = c_mixed(zoo::werner(0.7), fam);
  io::ReportContext ctx{.state_id = "werner", .dims = "2x2", .seed = 0};
  for (const auto& op : fam.operators) ctx.operator_tags.push_back(op.tag());
  const auto j = json::parse(io::write_report(report, ctx, io::Format::Json));
  CHECK(j["value"].get<double>() == report.value);
  CHECK(j["restarts"] == 50);
  CHECK(j["best_weights"].size() == 1);

  const auto row = io::write_report(report, ctx, io::Format::CsvRow);
  std::istringstream is(row);
  std::vector<std::string> cells;
  for (std::string c; std::getline(is, c, ',');) cells.push_back(c);
  REQUIRE(cells.size() == 7);
  CHECK(std::stod(cells[2]) == report.value);
  CHECK(cells[3].substr(0, 9) == "entangled");
}

TEST_CASE("CSV layout") {
  CHECK(io::csv_header(false) == "state_id,dims,value,verdict,restarts,seed,wall_time_s");
  CHECK(io::csv_header(true) ==
        "state_id,dims,value,verdict,restarts,seed,wall_time_s,ppt,ppt_min_eig,wootters,"
        "disagreement");

  const auto fam = enumerate_family(SubsystemDims({2, 2}));
  std::string csv = io::csv_header(false) + "\n";
  for (int i = 0; i <= 20; ++i) {
    const double p = 0.05 * i;
    const auto report = c_mixed(zoo::werner(p), fam, OptimizerConfig{.restarts = 4});
    csv += io::write_report(report, {.state_id = "werner", .dims = "2x2"}, io::Format::CsvRow);
  }
  CHECK(count_lines(csv) == 22);

  io::CrossCheck cc{.ppt = false, .ppt_min_eigenvalue = -0.1, .wootters = 0.5};
  const auto report = c_mixed(zoo::werner(0.8), fam, OptimizerConfig{.restarts = 4});
  const auto row = io::write_report(
      report, {.state_id = "werner", .dims = "2x2", .cross_check = cc}, io::Format::CsvRow);
  CHECK(std::count(row.begin(), row.end(), ',') == 10);
}

TEST_CASE("published example files load") {
  const std::filesystem::path dir = SEPCRIT_DOCS_DIR "/examples";
  const auto bell = io::read_state(dir / "bell_pure.json");
  CHECK((std::get<PureState>(bell.state).amplitudes() - zoo::bell().amplitudes()).norm() < 1e-15);
  const auto werner = io::read_state(dir / "werner_mixed.json");
  CHECK(std::get<DensityMatrix>(werner.state).matrix() == zoo::werner(0.8).matrix());
  const auto ghz = io::read_state(dir / "ghz3_pure.json");
  const SubsystemDims q3({2, 2, 2});
  CHECK((std::get<PureState>(ghz.state).amplitudes() - zoo::ghz(q3).amplitudes()).norm() < 1e-15);
  CHECK(ghz.metadata.name == std::optional<std::string>("ghz"));
}
