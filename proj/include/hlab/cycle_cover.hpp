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

#ifndef HLAB_CYCLE_COVER_HPP_
#define HLAB_CYCLE_COVER_HPP_

// Minimum vertex-disjoint cycle cover (partition of a graph into disjoint
// edges and/or cycles) through its assignment relaxation: a fixed-point-free
// permutation sigma with sigma(i) adjacent to i is a perfect matching of the
// bipartite double of the graph, and its cycles are the parts of a cover.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hlab/graph.hpp"
#include "hlab/problems.hpp"

namespace hlab {

inline constexpr int kMaxCoverVertices = 10;

// Symmetric 0/1 matrix with entry (i, j) = 1 iff {i, j} is an edge.
class AssignmentMatrix {
 public:
  explicit AssignmentMatrix(int n)
      : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  int size() const { return n_; }
  std::uint8_t operator()(int i, int j) const { return cells_[index(i, j)]; }
  void set(int i, int j, std::uint8_t value) { cells_[index(i, j)] = value; }
  bool symmetric() const;

  friend bool operator==(const AssignmentMatrix&, const AssignmentMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<std::uint8_t> cells_;
};

class Permutation {
 public:
  // Throws ContractError unless image is a bijection on 0..n-1.
  explicit Permutation(std::vector<Vertex> image);

  std::size_t size() const { return image_.size(); }
  Vertex operator[](std::size_t i) const { return image_[i]; }
  const std::vector<Vertex>& image() const { return image_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> image_;
};

struct CoverPart {
  enum class Kind { kEdge, kCycle };

  Kind kind;
  // Edge: its two endpoints. Cycle: the closed walk, length >= 3.
  std::vector<Vertex> vertices;

  friend bool operator==(const CoverPart&, const CoverPart&) = default;
};

struct CycleCoverPartition {
  std::vector<CoverPart> parts;

  std::size_t part_count() const { return parts.size(); }

  friend bool operator==(const CycleCoverPartition&, const CycleCoverPartition&) = default;
};

AssignmentMatrix assignment_matrix(const Graph& g);

// Grid in the x1..xn row/column layout; entries chosen by sigma print as (1).
std::string format_matrix(const AssignmentMatrix& m, const Permutation* sigma = nullptr);

// 2-cycles of sigma become edge parts, longer cycles become cycle parts.
// Parts are ordered by smallest vertex; cycles start there and follow sigma.
// Throws ContractError on a fixed point or an entry sigma(i) not adjacent to i.
CycleCoverPartition cover_from_permutation(const Graph& g, const Permutation& sigma);

// Inverse of cover_from_permutation: cycles oriented as listed, edges as 2-cycles.
Permutation permutation_from_cover(const CycleCoverPartition& cover, int vertex_count);

// Rotates each cycle to its smallest vertex, orients it so the second vertex
// is below the last one and sorts parts by smallest vertex.
CycleCoverPartition canonical(CycleCoverPartition cover);

// Throws ContractError unless the parts are disjoint, cover every vertex and
// only use edges of g.
void validate_cover(const Graph& g, const CycleCoverPartition& cover);

// Edges used by the parts (an edge part uses one edge, a k-cycle k edges).
ElementMask cover_edge_mask(const Graph& g, const CycleCoverPartition& cover);

// Fixed-point-free permutations respecting the matrix, ascending
// lexicographically. Throws CapacityError above kMaxCoverVertices.
void for_each_assignment_solution(const Graph& g, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enumerate_assignment_solutions(const Graph& g);

// Fewest parts, ties broken by the lexicographically smallest canonical form;
// nullopt when the graph has no cover.
std::optional<CycleCoverPartition> min_cycle_cover(const Graph& g);

struct LemmaHmcReport {
  bool hamiltonian = false;
  std::uint64_t hcp_work = 0;
  std::optional<CycleCoverPartition> min_cover;
  // The minimum cover is one cycle through all vertices and the HCP oracle
  // accepts its edge set.
  bool single_hamiltonian_part = false;
  // Hamiltonian implies single_hamiltonian_part.
  bool holds = false;
};

LemmaHmcReport lemma_hmc_check(const Graph& g);

struct GreedyCoverReport {
  std::vector<std::size_t> accepted_edges;
  // Set when every component of the accepted edges is a cycle or a single edge.
  std::optional<CycleCoverPartition> cover;
  std::optional<std::size_t> optimum_parts;
  bool reached_optimum = false;
};

// Takes edges in the given order (a permutation of all edge indices) while
// every vertex keeps degree <= 2, then compares the result with the optimum.
GreedyCoverReport greedy_cover_probe(const Graph& g, std::span<const std::size_t> ordering);

// {"parts": [{"type": "edge"|"cycle", "vertices": [...]}]}, 1-based vertices.
nlohmann::ordered_json cover_to_json(const CycleCoverPartition& cover);

}  // namespace hlab

#endif  // HLAB_CYCLE_COVER_HPP_
