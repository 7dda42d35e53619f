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

#ifndef HLAB_GRAPH_HPP_
#define HLAB_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hlab {

// Vertices are 0-based internally and 1-based in DIMACS text.
using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph. Edge indices follow construction order and never
// change; endpoints are stored with u < v.
class Graph {
 public:
  Graph() = default;
  // Throws ContractError on loops, repeated edges or out-of-range endpoints.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  bool adjacent(Vertex a, Vertex b) const {
    return edge_id_[static_cast<std::size_t>(a * n_ + b)] >= 0;
  }
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  // Ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<int> edge_id_;  // n*n, -1 when absent
};

// DIMACS edge format: "p edge n m" then m lines "e u v" (1-based); 'c' lines
// are comments.
Graph parse_graph(std::string_view text);
std::string to_dimacs(const Graph& g);

// The 8-vertex, 12-edge example graph with its canonical edge numbering
// e1..e12 (indices 0..11):
//   {1,2} {1,8} {2,3} {2,5} {2,8} {3,4} {3,6} {4,5} {4,6} {5,7} {6,7} {7,8}
// Its only Hamiltonian cycle is 1-2-3-6-4-5-7-8, i.e. edges
// {e1,e2,e3,e7,e8,e9,e10,e12}.
Graph figure1_graph();

// A randomly relabelled n-cycle plus extra_edges random chords; edges sorted.
Graph random_hamiltonian_graph(int n, std::size_t extra_edges, std::uint64_t seed);

// G(n, p) with p = numerator / denominator; edges sorted.
Graph random_graph(int n, std::uint64_t numerator, std::uint64_t denominator, std::uint64_t seed);

}  // namespace hlab

#endif  // HLAB_GRAPH_HPP_
