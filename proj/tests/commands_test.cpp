// Copyright 2026 The Authors.
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "hlab/cycle_cover.hpp"
#include "hlab/errors.hpp"
#include "hlab/random.hpp"
#include "oracles/brute_force.hpp"

namespace hlab::cli {
namespace {

using nlohmann::json;

constexpr const char* kP3 = "ground 3\nset 0 2\nset 1\n";
constexpr const char* kU24 = "ground 4\nset 0 1\nset 0 2\nset 0 3\nset 1 2\nset 1 3\nset 2 3\n";
constexpr const char* kP3Graph = "p edge 3 2\ne 1 2\ne 2 3\n";
constexpr const char* kTriangle = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";

struct EnvGuard {
  explicit EnvGuard(const char* value) { setenv("HLAB_MAX_N", value, 1); }
  ~EnvGuard() { unsetenv("HLAB_MAX_N"); }
};

int run_args(std::vector<std::string> args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

TEST_CASE("matroid command") {
  const auto p3 = cmd_matroid(kP3, "p3", Format::kJson, Caps{});
  CHECK(p3.exit_code == 1);
  const auto j = json::parse(p3.output);
  CHECK(j["family_id"] == "p3");
  CHECK(j["exchange"] == false);
  CHECK(j["violation"]["pi1"] == json::array({1}));
  CHECK(j["maximal_sets"] == json::array({json::array({1}), json::array({0, 2})}));

  CHECK(cmd_matroid(kU24, "u24", Format::kJson, Caps{}).exit_code == 0);
  CHECK(cmd_matroid(kP3, "p3", Format::kText, Caps{}).output.find("pi1 = {b}, pi2 = {a,c}") != std::string::npos);
  CHECK_THROWS_AS(cmd_matroid(kP3, "p3", Format::kCsv, Caps{}), ContractError);
  Caps tight;
  tight.ground = 2;
  CHECK_THROWS_AS(cmd_matroid(kP3, "p3", Format::kJson, tight), CapacityError);
}

TEST_CASE("greedy command") {
  const auto r = cmd_greedy(kP3, "p3", {2, 3, 2}, Format::kJson, Caps{});
  CHECK(r.exit_code == 1);
  const auto j = json::parse(r.output);
  CHECK(j["greedy"]["weight"] == 3);
  CHECK(j["optimum"]["weight"] == 4);
  CHECK(j["greedy_gap"] == 1);
  CHECK(cmd_greedy(kU24, "u24", {1, 2, 3, 4}, Format::kJson, Caps{}).exit_code == 0);
  CHECK_THROWS_AS(cmd_greedy(kP3, "p3", {1, 2}, Format::kJson, Caps{}), ContractError);
  CHECK_THROWS_AS(cmd_greedy(kP3, "p3", {1, 0, 2}, Format::kJson, Caps{}), ContractError);
}

TEST_CASE("figure bundle") {
  const auto first = cmd_figure1(Format::kJson);
  CHECK(first.exit_code == 0);
  CHECK(cmd_figure1(Format::kJson).output == first.output);
  const auto j = json::parse(first.output);
  CHECK(j["graph"]["edges"].size() == 12);
  CHECK(j["assignment_solution_count"] == testing::covers_by_permutation(figure1_graph()).size());
  CHECK(j["hamiltonian_cycle_count"] == testing::hamiltonian_cycles_by_permutation(figure1_graph()).size());
  CHECK(j["solutions"][0]["part_count"] == 3);
  CHECK(j["solutions"][1]["part_count"] == 1);
  CHECK(j["dead_edges"] == json::array({"e5"}));
  CHECK(j["greedy_probe"]["first_edge"] == "e4");
  CHECK(cmd_figure1(Format::kText).output.find("cover (c): ") != std::string::npos);
  CHECK_THROWS_AS(cmd_figure1(Format::kCsv), ContractError);
}

TEST_CASE("cycle cover command") {
  CHECK(cmd_mvdccp(kP3Graph, Format::kJson, Caps{}).exit_code == 1);
  const auto tri = cmd_mvdccp(kTriangle, Format::kJson, Caps{});
  CHECK(tri.exit_code == 0);
  const auto j = json::parse(tri.output);
  CHECK(j["assignment_solution_count"] == 2);
  CHECK(j["min_cycle_cover"]["parts"][0]["vertices"] == json::array({1, 2, 3}));
  Caps tight;
  tight.cover_vertices = 2;
  CHECK_THROWS_AS(cmd_mvdccp(kTriangle, Format::kJson, tight), CapacityError);
  CHECK_THROWS_AS(cmd_mvdccp("p edge 11 0\n", Format::kJson, Caps{}), CapacityError);
}

TEST_CASE("classify command") {
  const auto a = cmd_classify(ProblemKind::kHcp, 5, 7, kDefaultSeed, 3, Format::kJson, Caps{});
  CHECK(a.output == cmd_classify(ProblemKind::kHcp, 5, 7, kDefaultSeed, 3, Format::kJson, Caps{}).output);
  CHECK(json::parse(a.output)["rows"].size() == 3);
  CHECK(cmd_classify(ProblemKind::kMisp, 4, 6, 1, 2, Format::kCsv, Caps{}).output.rfind("problem,n", 0) == 0);
  Caps tight;
  tight.growth = 6;
  CHECK_THROWS_AS(cmd_classify(ProblemKind::kMisp, 4, 7, 1, 2, Format::kJson, tight), CapacityError);
}

TEST_CASE("trace command") {
  TraceRequest req{ProblemKind::kMisp, kP3Graph, "first", {}, 0};
  CHECK(cmd_trace(req, Format::kText).output.find("# result {x1,x3}") != std::string::npos);
  req.policy = "given";
  req.order = {2};
  const auto j = json::parse(cmd_trace(req, Format::kJson).output);
  CHECK(j["queries"][0]["element"] == "x2");
  CHECK(j["result"] == "{x2}");
  CHECK(j["theorem2_check"] == true);
  req.order = {0};
  CHECK_THROWS_AS(cmd_trace(req, Format::kJson), ContractError);
  TraceRequest fam{ProblemKind::kFamily, kP3, "random", {}, 3};
  CHECK(cmd_trace(fam, Format::kJson).exit_code == 0);
  TraceRequest no_tour{ProblemKind::kHcp, kP3Graph, "first", {}, 0};
  CHECK_THROWS_AS(cmd_trace(no_tour, Format::kJson), ContractError);
}

TEST_CASE("verdicts command") {
  const auto j = json::parse(cmd_verdicts({}, Format::kJson).output);
  REQUIRE(j["verdicts"].size() == 2);
  CHECK(j["verdicts"][0]["name"] == "figure1-misp");
  CHECK(j["verdicts"][1]["problem"] == "hcp");
  const auto csv = cmd_verdicts({{ProblemKind::kSat, "tiny", "p cnf 3 1\n1 2 3 0\n"}}, Format::kCsv).output;
  CHECK(csv.find("\ntiny,sat,3,6,true,") != std::string::npos);
}

TEST_CASE("size caps from the environment") {
  CHECK(Caps::from_environment().ground == 24);
  {
    EnvGuard env("6");
    const auto caps = Caps::from_environment();
    CHECK(caps.ground == 6);
    CHECK(caps.cover_vertices == 6);
    CHECK(caps.growth == 6);
  }
  {
    EnvGuard env("1000");
    const auto caps = Caps::from_environment();
    CHECK(caps.ground == 24);
    CHECK(caps.cover_vertices == 10);
    CHECK(caps.growth == 64);
  }
  {
    EnvGuard env("ten");
    CHECK_THROWS_AS(Caps::from_environment(), ContractError);
  }
}

TEST_CASE("command line") {
  const auto dir = std::filesystem::temp_directory_path() / "hlab_commands_test";
  std::filesystem::create_directories(dir);
  const auto p3 = (dir / "p3.fam").string();
  std::ofstream(p3) << kP3;
  const auto report = (dir / "report.json").string();

  std::string out, err;
  CHECK(run_args({"matroid", "--input", p3}, &out) == 1);
  CHECK(json::parse(out)["family_id"] == "p3");
  CHECK(run_args({"greedy", "--input", p3, "--weights", "2,3,2", "--format", "text"}, &out) == 1);
  CHECK(out.find("gap: 1") != std::string::npos);
  CHECK(run_args({"greedy", "--input", p3, "--weights", "1,1"}, &out, &err) == 2);
  CHECK(err.find("expected 3 weights") != std::string::npos);
  CHECK(run_args({"figure1", "--out", report}, &out) == 0);
  CHECK(out.empty());
  CHECK(std::filesystem::file_size(report) > 0);
  CHECK(run_args({"classify", "--problem", "misp", "--sizes", "4..6", "--format", "csv"}, &out) == 0);
  CHECK(run_args({"classify", "--sizes", "6-4"}, &out, &err) == 2);
  CHECK(run_args({"matroid", "--input", (dir / "missing").string()}, &out, &err) == 2);
  CHECK(err.find("cannot read") != std::string::npos);
  CHECK(run_args({}, &out, &err) == 2);
  CHECK(run_args({"bogus"}, &out, &err) == 2);
  CHECK(run_args({"figure1", "--format", "yaml"}, &out, &err) == 2);
  CHECK(run_args({"--help"}, &out, &err) == 0);
  {
    EnvGuard env("2");
    CHECK(run_args({"matroid", "--input", p3}, &out, &err) == 2);
    CHECK(err.find("cap") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace hlab::cli
