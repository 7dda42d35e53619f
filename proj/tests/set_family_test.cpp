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

#include <set>

#include "hlab/errors.hpp"
#include "hlab/family_io.hpp"
#include "hlab/random.hpp"
#include "hlab/set_family.hpp"
#include "oracles/brute_force.hpp"

namespace hlab {
namespace {

constexpr Mask A = 1, B = 2, C = 4, D = 8;

SetFamily closure(std::size_t n, std::vector<Mask> tops) { return downward_closure(GroundSet(n), tops); }

std::vector<Mask> members_of(const SetFamily& f) { return {f.members().begin(), f.members().end()}; }

SetFamily path_p3() { return closure(3, {A | C, B}); }

SetFamily uniform(std::size_t rank, std::size_t n) {
  std::vector<Mask> tops;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (static_cast<std::size_t>(cardinality(m)) == rank) tops.push_back(m);
  }
  return closure(n, tops);
}

SetFamily random_family(Rng& rng, std::size_t n) {
  std::vector<Mask> tops;
  const auto count = 1 + rng.below(4);
  for (std::uint64_t i = 0; i < count; ++i) tops.push_back(static_cast<Mask>(rng.below(Mask{1} << n)));
  return closure(n, tops);
}

TEST_CASE("heredity check") {
  CHECK(is_hereditary(closure(2, {A | B})));
  const SetFamily only_ab(GroundSet(2), {A | B});
  const auto witness = find_heredity_violation(only_ab);
  REQUIRE(witness.has_value());
  CHECK(witness->member == (A | B));
  CHECK(witness->missing_subset == A);
}

TEST_CASE("downward closure") {
  CHECK(members_of(closure(2, {A | B})) == std::vector<Mask>{0, A, B, A | B});

  SUBCASE("empty antichain gives the family holding only the empty set") {
    const auto f = closure(3, {});
    REQUIRE(f.size() == 1);
    CHECK(f.contains(0));
  }
  SUBCASE("closure of {a,c},{b}") {
    const auto f = path_p3();
    CHECK(members_of(f) == std::vector<Mask>{0, A, B, C, A | C});
  }
  SUBCASE("closure is hereditary on every subset") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
      const auto f = random_family(rng, 1 + rng.below(8));
      CHECK(is_hereditary(f));
      CHECK(testing::closed_under_subsets(f));
      CHECK(f.contains(0));
    }
  }
  CHECK_THROWS_AS(GroundSet(25), CapacityError);
  CHECK_THROWS_AS(closure(2, {C}), ContractError);
}

TEST_CASE("set family rejects empty member lists and foreign elements") {
  CHECK_THROWS_AS(SetFamily(GroundSet(2), {}), ContractError);
  CHECK_THROWS_AS(SetFamily(GroundSet(2), {C}), ContractError);
  CHECK_THROWS_AS(GroundSet(std::vector<std::string>{"a", "a"}), ContractError);
  CHECK(GroundSet(3).format(A | C) == "{a,c}");
}

TEST_CASE("exchange property") {
  CHECK(has_exchange_property(closure(2, {A, B})));
  CHECK(has_exchange_property(uniform(2, 4)));

  const auto violation = find_exchange_violation(path_p3());
  REQUIRE(violation.has_value());
  CHECK(violation->smaller == B);
  CHECK(violation->larger == (A | C));

  CHECK_THROWS_AS(find_exchange_violation(SetFamily(GroundSet(2), {A | B})), ContractError);
}

TEST_CASE("matroid recognition") {
  CHECK(is_matroid(uniform(2, 4)));
  CHECK_FALSE(is_matroid(path_p3()));
  CHECK(is_matroid(closure(3, {})));
  CHECK_FALSE(is_matroid(SetFamily(GroundSet(2), {A | B})));
}

TEST_CASE("weights") {
  const WeightFunction w({2, 3});
  CHECK(weight_of(0, w) == 0);
  CHECK(weight_of(A | B, w) == 5);
  CHECK_THROWS_AS(WeightFunction({1, 0}), ContractError);
  CHECK_THROWS_AS(WeightFunction({-2}), ContractError);
  CHECK_THROWS_AS(weight_of(C, w), ContractError);
}

TEST_CASE("greedy") {
  SUBCASE("heavier singleton of U(1,2)") {
    CHECK(greedy(closure(2, {A, B}), WeightFunction({5, 3})).selection == A);
  }
  SUBCASE("graphic matroid of a triangle") {
    // Forests of the triangle: any two of its three edges.
    const auto f = closure(3, {A | B, A | C, B | C});
    const WeightFunction w({3, 2, 1});
    const auto g = greedy(f, w);
    CHECK(g.selection == (A | B));
    CHECK(weight_of(g.selection, w) == testing::brute_max_weight(f, w.values()));
  }
  SUBCASE("ties go to the lower index") {
    CHECK(greedy(closure(3, {A, B, C}), WeightFunction({1, 1, 1})).selection == A);
  }
  SUBCASE("trace prefixes are members and the result is maximal") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
      const auto n = 1 + rng.below(8);
      const auto f = random_family(rng, n);
      std::vector<std::int64_t> w;
      for (std::uint64_t k = 0; k < n; ++k) w.push_back(static_cast<std::int64_t>(1 + rng.below(5)));
      const auto g = greedy(f, WeightFunction(w));
      REQUIRE(g.trace.front() == 0);
      for (std::size_t k = 0; k < g.trace.size(); ++k) {
        CHECK(f.contains(g.trace[k]));
        CHECK(cardinality(g.trace[k]) == static_cast<int>(k));
      }
      CHECK(g.trace.back() == g.selection);
      for (std::size_t r = 0; r < n; ++r) {
        if (!(g.selection >> r & 1u)) CHECK_FALSE(f.contains(g.selection | (Mask{1} << r)));
      }
      CHECK(greedy(f, WeightFunction(w)).selection == g.selection);
    }
  }
  CHECK_THROWS_AS(greedy(SetFamily(GroundSet(2), {A | B}), WeightFunction({1, 1})), ContractError);
  CHECK_THROWS_AS(greedy(path_p3(), WeightFunction({1, 1})), ContractError);
}

TEST_CASE("brute force maximum") {
  const auto u12 = brute_force_max(closure(2, {A, B}), WeightFunction({5, 3}));
  CHECK(u12.set == A);
  CHECK(u12.weight == 5);
  const auto empty = brute_force_max(closure(1, {}), WeightFunction({1}));
  CHECK(empty.set == 0);
  CHECK(empty.weight == 0);
  const auto p3 = brute_force_max(path_p3(), WeightFunction({2, 3, 2}));
  CHECK(p3.set == (A | C));
  CHECK(p3.weight == 4);
  // Equal weights: the smaller mask wins.
  CHECK(brute_force_max(closure(2, {A, B}), WeightFunction({4, 4})).set == A);
}

TEST_CASE("greedy defeat witness") {
  SUBCASE("path P3") {
    const auto f = path_p3();
    const auto w = theorem1_witness(f, {B, A | C});
    CHECK(w.values() == std::vector<std::int64_t>{2, 3, 2});
    CHECK(weight_of(greedy(f, w).selection, w) == 3);
    CHECK(brute_force_max(f, w).weight == 4);
  }
  SUBCASE("closure of {a,b},{c}") {
    const auto f = closure(3, {A | B, C});
    const auto w = theorem1_witness(f, {C, A | B});
    CHECK(w.values() == std::vector<std::int64_t>{2, 2, 3});
    CHECK(weight_of(greedy(f, w).selection, w) == 3);
    CHECK(brute_force_max(f, w).weight == 4);
  }
  SUBCASE("light elements outside the violation are outweighed") {
    // Unscaled k+2 / k+1 / 1 weights tie here: greedy {b,d} = 4 = {a,c}.
    const auto f = closure(4, {A | C, B | D});
    const auto w = theorem1_witness(f, {B, A | C});
    CHECK(w.values() == std::vector<std::int64_t>{4, 6, 4, 1});
    CHECK(weight_of(greedy(f, w).selection, w) == 7);
    CHECK(brute_force_max(f, w).weight == 8);
  }
  CHECK_THROWS_AS(theorem1_witness(path_p3(), {A, A | C}), ContractError);
  CHECK_THROWS_AS(theorem1_witness(path_p3(), {B, A | B}), ContractError);
}

TEST_CASE("hereditary family enumeration") {
  // Dedekind numbers count every down-set including the empty family, which
  // SetFamily excludes.
  const std::size_t expected_all[] = {2, 3, 6, 20, 168};
  for (std::size_t n = 0; n <= 4; ++n) {
    CAPTURE(n);
    const auto families = enumerate_hereditary_families(n);
    CHECK(testing::count_antichains(n) == expected_all[n]);
    CHECK(families.size() + 1 == testing::count_antichains(n));
    std::set<std::vector<Mask>> distinct;
    for (const auto& f : families) {
      CHECK(testing::closed_under_subsets(f));
      distinct.insert(members_of(f));
    }
    CHECK(distinct.size() == families.size());
  }
  CHECK(enumerate_hereditary_families(0).front().size() == 1);
  CHECK_THROWS_AS(enumerate_hereditary_families(5), CapacityError);
}

TEST_CASE("labelled matroid counts") {
  // Matroids on n labelled points: 1, 2, 5, 16, 68.
  const std::size_t expected[] = {1, 2, 5, 16, 68};
  for (std::size_t n = 0; n <= 4; ++n) {
    std::size_t count = 0;
    for_each_hereditary_family(n, [&](const SetFamily& f) { count += is_matroid(f) ? 1 : 0; });
    CHECK(count == expected[n]);
  }
}

TEST_CASE("exchange check agrees with the pair scan on every small family") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for_each_hereditary_family(n, [](const SetFamily& f) {
      CHECK(has_exchange_property(f) == testing::exchange_by_pair_scan(f));
    });
  }
}

TEST_CASE("greedy is optimal exactly on the matroids") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for_each_hereditary_family(n, [n](const SetFamily& f) {
      const auto violation = find_exchange_violation(f);
      if (violation) {
        const auto w = theorem1_witness(f, *violation);
        CHECK(weight_of(greedy(f, w).selection, w) < testing::brute_max_weight(f, w.values()));
        return;
      }
      std::vector<std::int64_t> w(n, 1);
      for (;;) {
        CHECK(weight_of(greedy(f, WeightFunction(w)).selection, WeightFunction(w)) ==
              testing::brute_max_weight(f, w));
        std::size_t i = 0;
        while (i < n && w[i] == 3) w[i++] = 1;
        if (i == n) break;
        ++w[i];
      }
    });
  }
}

TEST_CASE("family file format") {
  const auto f = parse_family("# path a-b-c\nground 3\nset 0 2\n\nset 1\n");
  CHECK(f == path_p3());
  CHECK(write_family(f) == "ground 3\nset 1\nset 0 2\n");

  SUBCASE("round trip") {
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
      const auto g = random_family(rng, 1 + rng.below(10));
      CHECK(parse_family(write_family(g)) == g);
    }
  }
  SUBCASE("a bare set line is the empty set") { CHECK(parse_family("ground 2\nset\n").size() == 1); }
  CHECK_THROWS_AS(parse_family("set 0\n"), ParseError);
  CHECK_THROWS_AS(parse_family("ground 2\nset 2\n"), ParseError);
  CHECK_THROWS_AS(parse_family("ground 2\nset x\n"), ParseError);
  CHECK_THROWS_AS(parse_family("ground 2\nground 2\n"), ParseError);
  CHECK_THROWS_AS(parse_family("ground 2\nsets 1\n"), ParseError);
  CHECK_THROWS_AS(parse_family(""), ParseError);
  CHECK_THROWS_AS(parse_family("ground 30\n"), CapacityError);
}

TEST_CASE("family report") {
  const auto report = family_report("p3", path_p3());
  CHECK(report["family_id"] == "p3");
  CHECK(report["hereditary"] == true);
  CHECK(report["exchange"] == false);
  CHECK(report["violation"]["pi1"] == nlohmann::ordered_json::array({1}));
  CHECK(report["violation"]["pi2"] == nlohmann::ordered_json::array({0, 2}));
  CHECK_FALSE(family_report("u", uniform(2, 4)).contains("violation"));
  const auto broken = family_report("x", SetFamily(GroundSet(2), {A | B}));
  CHECK(broken["hereditary"] == false);
  CHECK(broken["exchange"].is_null());
}

}  // namespace
}  // namespace hlab
