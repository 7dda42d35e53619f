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

#ifndef HLAB_SEQUENTIAL_HPP_
#define HLAB_SEQUENTIAL_HPP_

// Element-by-element construction of admissible solutions through an
// extension predicate, with cost accounting.
//
// Time is counted in oracle units: every predicate evaluation costs one unit
// plus the elementary work the oracle reports for it.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hlab/oracle.hpp"

namespace hlab {

// Element-selection rule. Every rule queries each element at most once: an
// element rejected for a partial solution stays rejected for its supersets.
struct Policy {
  enum class Kind { kFirstFeasible, kRandom, kGivenOrder };

  Kind kind = Kind::kFirstFeasible;
  std::uint64_t seed = 0;
  // kGivenOrder: elements tried first, in this order; the rest follow ascending.
  std::vector<std::size_t> order;

  static Policy first_feasible() { return {}; }
  static Policy random(std::uint64_t seed) { return {Kind::kRandom, seed, {}}; }
  static Policy given_order(std::vector<std::size_t> order) {
    return {Kind::kGivenOrder, 0, std::move(order)};
  }
};

struct TraceQuery {
  std::size_t element;
  std::size_t partial_size;
  bool accepted;
  std::uint64_t work;             // oracle-reported work of this query
  std::uint64_t cumulative_work;  // time units so far, this query included
};

struct TraceStep {
  std::size_t element;
  std::uint64_t cumulative_work;
  ElementMask snapshot;
};

struct SequentialTrace {
  ProblemKind kind = ProblemKind::kFamily;
  // Cost of establishing that the empty set is admissible.
  std::uint64_t start_work = 0;
  std::vector<TraceQuery> queries;
  // Accepted extensions only; snapshot i has i + 1 elements.
  std::vector<TraceStep> steps;
  ElementMask result = 0;
  // No element extends the result.
  bool support = false;

  std::uint64_t total_work() const { return queries.empty() ? start_work : queries.back().cumulative_work; }
};

// Throws ContractError when Q is empty (the empty set is not admissible) or
// the policy order is invalid.
SequentialTrace sequential_build(IndependenceOracle& oracle, const Policy& policy);

// Cumulative time strictly grows from the empty start through every accepted
// step and never exceeds the completion time. An empty trace passes.
bool theorem2_check(const SequentialTrace& trace);

// "step element verdict work" lines.
std::string format_trace(const SequentialTrace& trace, const IndependenceOracle& oracle);

// Random instance of size n for growth probes (see classify_growth).
std::unique_ptr<IndependenceOracle> make_growth_instance(ProblemKind kind, std::size_t n, std::uint64_t seed);

// Largest n accepted by classify_growth per problem.
std::size_t growth_size_cap(ProblemKind kind);

struct GrowthRow {
  std::size_t n = 0;
  std::size_t instances = 0;
  std::uint64_t queries = 0;
  std::uint64_t worst_work = 0;
  double mean_work = 0.0;
  // Largest work / max(1, |partial|) seen at this size.
  double worst_work_per_partial = 0.0;
};

struct GrowthReport {
  ProblemKind kind = ProblemKind::kMisp;
  std::uint64_t seed = 0;
  std::size_t instances_per_size = 0;
  std::vector<GrowthRow> rows;
  // Least-squares slopes of log(1 + worst work) against log n and against n.
  std::optional<double> loglog_slope;
  std::optional<double> semilog_slope;
  std::uint64_t bound_constant = 1;
  std::string label;
};

inline constexpr std::uint64_t kGrowthBoundConstant = 1;

// Generates instances_per_size random instances per size, builds a random
// sequential trace on each, and records the work of every extension query.
// MISP is labelled "poly-bounded observed" when worst work <= c * n^2 at
// every size; other problems report raw growth.
GrowthReport classify_growth(ProblemKind kind, std::size_t min_n, std::size_t max_n, std::uint64_t seed,
                             std::size_t instances_per_size = 8);

nlohmann::ordered_json growth_to_json(const GrowthReport& report);
std::string growth_to_csv(const GrowthReport& report);

struct VerdictInstance {
  std::string name;
  std::shared_ptr<IndependenceOracle> oracle;
};

struct VerdictRow {
  std::string name;
  ProblemKind kind = ProblemKind::kFamily;
  std::size_t n = 0;
  std::size_t elements = 0;
  bool admissible_start = false;
  std::string support;
  std::size_t support_size = 0;
  std::uint64_t construction_time = 0;  // oracle units
  std::uint64_t elementary_work = 0;    // sum of oracle-reported work
  std::uint64_t queries = 0;
  std::uint64_t first_query_work = 0;
  std::uint64_t max_query_work = 0;
  std::string observed;
  std::string claimed;
};

// First-feasible construction on each instance, observed costs next to the
// classification claimed for the problem. Claims are hypotheses, not results.
std::vector<VerdictRow> uf_verdict_sheet(std::span<const VerdictInstance> instances);

nlohmann::ordered_json verdicts_to_json(std::span<const VerdictRow> rows);
std::string verdicts_to_csv(std::span<const VerdictRow> rows);

}  // namespace hlab

#endif  // HLAB_SEQUENTIAL_HPP_
