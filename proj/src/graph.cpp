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

#include "hlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hlab/errors.hpp"
#include "hlab/random.hpp"
#include "text.hpp"

namespace hlab {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw ContractError("negative vertex count");
  const auto n = static_cast<std::size_t>(n_);
  neighbors_.assign(n, {});
  edge_id_.assign(n * n, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) throw ContractError("edge endpoint out of range");
    if (e.u == e.v) throw ContractError("loops are not allowed");
    if (e.u > e.v) std::swap(e.u, e.v);
    auto& slot = edge_id_[static_cast<std::size_t>(e.u * n_ + e.v)];
    if (slot >= 0) throw ContractError("multiple edges are not allowed");
    slot = static_cast<int>(i);
    edge_id_[static_cast<std::size_t>(e.v * n_ + e.u)] = static_cast<int>(i);
    neighbors_[static_cast<std::size_t>(e.u)].push_back(e.v);
    neighbors_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : neighbors_) std::sort(list.begin(), list.end());
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
  const int id = edge_id_[static_cast<std::size_t>(a * n_ + b)];
  if (id < 0) return std::nullopt;
  return static_cast<std::size_t>(id);
}

Graph parse_graph(std::string_view text) {
  std::optional<std::pair<int, std::size_t>> header;
  std::vector<Edge> edges;
  std::vector<bool> seen;
  std::size_t last_line = 0;
  for (const auto& [line_no, words] : text::split_lines(text)) {
    last_line = line_no;
    if (words.front() == "c") continue;
    if (words.front() == "p") {
      if (header) throw ParseError(line_no, "duplicate problem line");
      if (words.size() != 4 || words[1] != "edge") throw ParseError(line_no, "expected 'p edge n m'");
      const int n = text::parse_int<int>(words[2], line_no);
      const auto m = text::parse_int<std::size_t>(words[3], line_no);
      if (n < 0) throw ParseError(line_no, "negative vertex count");
      header.emplace(n, m);
      seen.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
    } else if (words.front() == "e") {
      if (!header) throw ParseError(line_no, "edge line before 'p edge'");
      if (words.size() != 3) throw ParseError(line_no, "expected 'e u v'");
      const int n = header->first;
      const int u = text::parse_int<int>(words[1], line_no);
      const int v = text::parse_int<int>(words[2], line_no);
      if (u < 1 || v < 1 || u > n || v > n) throw ParseError(line_no, "vertex out of range");
      if (u == v) throw ParseError(line_no, "loop edge " + std::to_string(u));
      const auto key = static_cast<std::size_t>(std::min(u, v) - 1) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(std::max(u, v) - 1);
      if (seen[key]) throw ParseError(line_no, "duplicate edge");
      seen[key] = true;
      edges.push_back({u - 1, v - 1});
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(words.front()) + "'");
    }
  }
  if (!header) throw ParseError(last_line, "missing 'p edge n m' line");
  if (edges.size() != header->second) {
    throw ParseError(last_line, "header declares " + std::to_string(header->second) + " edges, found " +
                                    std::to_string(edges.size()));
  }
  return Graph(header->first, std::move(edges));
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

Graph figure1_graph() {
  // Read off the symmetric 0/1 assignment matrix of the example.
  return Graph(8, {{0, 1}, {0, 7}, {1, 2}, {1, 4}, {1, 7}, {2, 3},
                   {2, 5}, {3, 4}, {3, 5}, {4, 6}, {5, 6}, {6, 7}});
}

Graph random_hamiltonian_graph(int n, std::size_t extra_edges, std::uint64_t seed) {
  if (n < 3) throw ContractError("a Hamiltonian graph needs at least 3 vertices");
  const auto un = static_cast<std::size_t>(n);
  const std::size_t capacity = un * (un - 1) / 2 - un;
  if (extra_edges > capacity) {
    throw ContractError("at most " + std::to_string(capacity) + " extra edges fit on " +
                        std::to_string(n) + " vertices");
  }
  Rng rng(seed);
  std::vector<Vertex> order(un);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(std::span<Vertex>(order));

  std::vector<bool> used(un * un, false);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < un; ++i) {
    Vertex a = order[i];
    Vertex b = order[(i + 1) % un];
    if (a > b) std::swap(a, b);
    edges.push_back({a, b});
    used[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)] = true;
  }
  std::vector<Edge> chords;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!used[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)]) chords.push_back({a, b});
    }
  }
  // Partial Fisher-Yates: the first extra_edges slots are a uniform sample.
  for (std::size_t i = 0; i < extra_edges; ++i) {
    std::swap(chords[i], chords[i + static_cast<std::size_t>(rng.below(chords.size() - i))]);
    edges.push_back(chords[i]);
  }
  std::sort(edges.begin(), edges.end());
  return Graph(n, std::move(edges));
}

Graph random_graph(int n, std::uint64_t numerator, std::uint64_t denominator, std::uint64_t seed) {
  if (n < 0) throw ContractError("negative vertex count");
  if (denominator == 0 || numerator > denominator) throw ContractError("invalid edge probability");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (rng.chance(numerator, denominator)) edges.push_back({a, b});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace hlab
