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

#ifndef HLAB_PROBLEMS_HPP_
#define HLAB_PROBLEMS_HPP_

// Hereditary encodings of three NP problems as membership predicates
// "S in Q?", each reporting the elementary work it spent:
//
//   MISP  ground = vertices, Q = independent sets; work = adjacency probes.
//   HCP   ground = edges, Q = subsets of Hamiltonian cycles; work = search
//         nodes of the completion search.
//   SAT   ground = literals (x_v -> 2v, not x_v -> 2v+1), Q = subsets of
//         satisfying total assignments; work = search nodes.
//
// For HCP and SAT, Q is empty (not even the empty set) when the instance has
// no solution.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "hlab/cnf.hpp"
#include "hlab/graph.hpp"

namespace hlab {

using ElementMask = std::uint64_t;

inline constexpr std::size_t kMaxOracleElements = 64;

struct OracleVerdict {
  bool member = false;
  std::uint64_t work = 0;

  friend bool operator==(const OracleVerdict&, const OracleVerdict&) = default;
};

enum class ProblemKind { kMisp, kHcp, kSat, kFamily };

std::string_view to_string(ProblemKind kind);

struct PartialSolution {
  ProblemKind kind;
  ElementMask elements = 0;
};

OracleVerdict misp_member(const Graph& g, ElementMask vertices);
// Costs at most |partial| probes. Throws ContractError if v is already chosen.
OracleVerdict misp_extend(const Graph& g, const PartialSolution& partial, Vertex v);

OracleVerdict hcp_member(const Graph& g, ElementMask edges);
OracleVerdict hcp_extend(const Graph& g, const PartialSolution& partial, std::size_t edge);

OracleVerdict sat_member(const CnfFormula& f, ElementMask literals);
OracleVerdict sat_extend(const CnfFormula& f, const PartialSolution& partial, Literal literal);

// Hamiltonian cycles as vertex sequences starting at vertex 0 and oriented so
// the second vertex is smaller than the last; lexicographic order.
std::vector<std::vector<Vertex>> enumerate_hamiltonian_cycles(const Graph& g);

// Edge mask of a closed vertex sequence; throws ContractError on a missing edge.
ElementMask cycle_edge_mask(const Graph& g, std::span<const Vertex> cycle);

// Total satisfying assignments as literal masks, ascending by variable-wise
// lexicographic order (true before false).
std::vector<ElementMask> enumerate_models(const CnfFormula& f);

}  // namespace hlab

#endif  // HLAB_PROBLEMS_HPP_
