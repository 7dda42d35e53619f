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

#include <bit>

#include "hlab/errors.hpp"
#include "hlab/oracle.hpp"
#include "hlab/random.hpp"
#include "hlab/sequential.hpp"
#include "oracles/brute_force.hpp"

namespace hlab {
namespace {

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }

// Replays a trace against a fresh oracle and recomputes every number.
void check_against_replay(IndependenceOracle& fresh, const SequentialTrace& trace) {
  std::uint64_t time = 1 + fresh.member(0).work;
  CHECK(trace.start_work == time);
  ElementMask partial = 0;
  std::vector<bool> seen(fresh.element_count(), false);
  for (const auto& q : trace.queries) {
    CHECK_FALSE(seen[q.element]);
    seen[q.element] = true;
    const auto v = fresh.member(partial | ElementMask{1} << q.element);
    CHECK(v.member == q.accepted);
    CHECK(q.partial_size == static_cast<std::size_t>(std::popcount(partial)));
    time += 1 + q.work;
    CHECK(q.cumulative_work == time);
    if (v.member) partial |= ElementMask{1} << q.element;
  }
  CHECK(trace.queries.size() == fresh.element_count());
  CHECK(trace.result == partial);
  for (std::size_t r = 0; r < fresh.element_count(); ++r) {
    if (!(partial >> r & 1)) CHECK_FALSE(fresh.member(partial | ElementMask{1} << r).member);
  }
}

TEST_CASE("path P3 trace") {
  MispOracle o(path3());
  const auto t = sequential_build(o, Policy::first_feasible());
  // member({}) 0 probes; x1 on {} 0; x2 on {x1} 1; x3 on {x1} 1.
  CHECK(t.start_work == 1);
  REQUIRE(t.queries.size() == 3);
  CHECK(t.queries[0].cumulative_work == 2);
  CHECK_FALSE(t.queries[1].accepted);
  CHECK(t.queries[1].cumulative_work == 4);
  CHECK(t.queries[2].cumulative_work == 6);
  REQUIRE(t.steps.size() == 2);
  CHECK(t.steps[0].snapshot == 0b001);
  CHECK(t.steps[1].snapshot == 0b101);
  CHECK(t.result == 0b101);
  CHECK(t.support);
  CHECK(t.total_work() == 6);
  CHECK(theorem2_check(t));
  CHECK(format_trace(t, o) ==
        "# step element verdict work cumulative\n"
        "0 - start 0 1\n"
        "1 x1 accept 0 2\n"
        "2 x2 reject 1 4\n"
        "3 x3 accept 1 6\n"
        "# result {x1,x3}\n");
}

TEST_CASE("figure graph first-feasible build") {
  HcpOracle o(figure1_graph());
  const auto t = sequential_build(o, Policy::first_feasible());
  HcpOracle fresh(figure1_graph());
  check_against_replay(fresh, t);
  const auto cycles = testing::hamiltonian_cycles_by_permutation(o.graph());
  CHECK(cycles.count(t.result) == 1);
  CHECK(t.steps.size() == 8);
  CHECK(o.format(t.result) == "{e1,e2,e3,e7,e8,e9,e10,e12}");
  CHECK(theorem2_check(t));
}

TEST_CASE("traces on random instances") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto kind = static_cast<ProblemKind>(s % 3);
    const std::size_t n = kind == ProblemKind::kHcp ? 6 : 7;
    const auto policy = s % 2 ? Policy::random(s) : Policy::given_order({3, 1});
    auto o = make_growth_instance(kind, n, s);
    const auto t = sequential_build(*o, policy);
    auto fresh = make_growth_instance(kind, n, s);
    check_against_replay(*fresh, t);
    CHECK(theorem2_check(t));
    if (policy.kind == Policy::Kind::kGivenOrder) {
      CHECK(t.queries[0].element == 3);
      CHECK(t.queries[1].element == 1);
      CHECK(t.queries[2].element == 0);
    }
  }
}

TEST_CASE("time check negative controls") {
  MispOracle o(path3());
  auto t = sequential_build(o, Policy::first_feasible());
  auto stalled = t;
  stalled.steps[1].cumulative_work = stalled.steps[0].cumulative_work;
  CHECK_FALSE(theorem2_check(stalled));
  auto early = t;
  early.steps[0].cumulative_work = early.start_work;
  CHECK_FALSE(theorem2_check(early));
  auto overrun = t;
  overrun.steps[1].cumulative_work = t.total_work() + 1;
  CHECK_FALSE(theorem2_check(overrun));
  CHECK(theorem2_check(SequentialTrace{}));
}

TEST_CASE("policy and instance errors") {
  MispOracle o(path3());
  CHECK_THROWS_AS(sequential_build(o, Policy::given_order({0, 0})), ContractError);
  CHECK_THROWS_AS(sequential_build(o, Policy::given_order({3})), ContractError);
  HcpOracle no_tour(path3());
  CHECK_THROWS_AS(sequential_build(no_tour, Policy::first_feasible()), ContractError);
  CHECK_THROWS_AS(make_growth_instance(ProblemKind::kHcp, 13, 0), CapacityError);
  CHECK_THROWS_AS(make_growth_instance(ProblemKind::kSat, 2, 0), ContractError);
  CHECK_THROWS_AS(classify_growth(ProblemKind::kMisp, 5, 4, 0), ContractError);
  CHECK_THROWS_AS(classify_growth(ProblemKind::kMisp, 4, 65, 0), CapacityError);
}

TEST_CASE("growth classification") {
  const auto a = classify_growth(ProblemKind::kMisp, 4, 12, 77, 4);
  const auto b = classify_growth(ProblemKind::kMisp, 4, 12, 77, 4);
  CHECK(growth_to_json(a) == growth_to_json(b));
  CHECK(growth_to_csv(a) == growth_to_csv(b));
  REQUIRE(a.rows.size() == 9);
  CHECK(a.label == "poly-bounded observed");
  for (const auto& r : a.rows) {
    CHECK(r.instances == 4);
    CHECK(r.queries == 4 * r.n);
    // A single extension query probes at most the partial solution.
    CHECK(r.worst_work <= r.n - 1);
    CHECK(r.worst_work_per_partial <= 1.0);
  }
  CHECK(a.loglog_slope.has_value());
  CHECK(growth_to_json(a)["work_unit"] == "adjacency probes");

  const auto single = classify_growth(ProblemKind::kSat, 6, 6, 1, 2);
  CHECK_FALSE(single.loglog_slope.has_value());
  CHECK(single.label == "raw growth (no law asserted)");
  CHECK(growth_to_json(single)["loglog_slope"].is_null());
  CHECK(growth_to_csv(single).rfind("problem,n,", 0) == 0);
}

TEST_CASE("verdict sheet") {
  std::vector<VerdictInstance> inputs{{"fig-misp", std::make_shared<MispOracle>(figure1_graph())},
                                      {"fig-hcp", std::make_shared<HcpOracle>(figure1_graph())},
                                      {"p3-hcp", std::make_shared<HcpOracle>(path3())}};
  const auto rows = uf_verdict_sheet(inputs);
  REQUIRE(rows.size() == 3);

  MispOracle replay(figure1_graph());
  const auto t = sequential_build(replay, Policy::first_feasible());
  std::uint64_t probes = 0;
  for (const auto& q : t.queries) probes += q.work;
  CHECK(rows[0].elementary_work == probes);
  CHECK(rows[0].construction_time == t.total_work());
  CHECK(rows[0].support == replay.format(t.result));
  CHECK(rows[0].queries == 8);
  CHECK(rows[0].claimed == "in UF: polynomial extension predicate (claimed)");
  CHECK(rows[0].observed.find("within bound") != std::string::npos);

  CHECK(rows[1].support == "{e1,e2,e3,e7,e8,e9,e10,e12}");
  CHECK(rows[1].claimed == "not in UF: inherently exponential (claimed)");
  CHECK_FALSE(rows[2].admissible_start);
  CHECK(rows[2].observed == "Q is empty: no admissible start");

  const auto j = verdicts_to_json(rows);
  CHECK(j["verdicts"].size() == 3);
  const auto csv = verdicts_to_csv(rows);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

}  // namespace
}  // namespace hlab
