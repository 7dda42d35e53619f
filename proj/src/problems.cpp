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

#include "hlab/problems.hpp"

#include <bit>
#include <numeric>
#include <optional>
#include <string>

#include "hlab/errors.hpp"

namespace hlab {

namespace {

ElementMask element_bit(std::size_t i) { return ElementMask{1} << i; }

void require_kind(const PartialSolution& partial, ProblemKind kind) {
  if (partial.kind != kind) {
    throw ContractError("partial solution of kind " + std::string(to_string(partial.kind)) +
                        " passed to a " + std::string(to_string(kind)) + " predicate");
  }
}

void require_vertex_capacity(const Graph& g) {
  if (static_cast<std::size_t>(g.vertex_count()) > kMaxOracleElements) {
    throw CapacityError("independent-set oracle supports at most 64 vertices");
  }
}

void require_edge_capacity(const Graph& g) {
  if (g.edge_count() > kMaxOracleElements) {
    throw CapacityError("Hamiltonian-cycle oracle supports at most 64 edges");
  }
}

// Depth-first extension of a Hamiltonian path from vertex 0 that must use
// every required edge. Each call of extend() is one search node.
class HamiltonSearch {
 public:
  using Visitor = std::function<bool(std::span<const Vertex>)>;

  HamiltonSearch(const Graph& g, ElementMask required)
      : g_(g),
        n_(g.vertex_count()),
        required_(static_cast<std::size_t>(n_)),
        visited_(static_cast<std::size_t>(n_), false) {
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (required & element_bit(i)) {
        const auto& e = g.edge(i);
        required_[static_cast<std::size_t>(e.u)].push_back(e.v);
        required_[static_cast<std::size_t>(e.v)].push_back(e.u);
      }
    }
  }

  // Calls visit on each Hamiltonian cycle found (both orientations unless
  // canonical_only); stops when visit returns true.
  bool run(const Visitor& visit, bool canonical_only) {
    visit_ = &visit;
    canonical_only_ = canonical_only;
    if (n_ < 3) {
      ++nodes_;
      return false;
    }
    path_.assign(1, 0);
    visited_[0] = true;
    return extend(0, -1);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  const std::vector<Vertex>& req(Vertex v) const { return required_[static_cast<std::size_t>(v)]; }
  bool is_visited(Vertex v) const { return visited_[static_cast<std::size_t>(v)]; }

  bool extend(Vertex u, Vertex prev) {
    ++nodes_;
    const auto depth = static_cast<int>(path_.size());
    if (depth == n_) return close(u, prev);

    std::optional<Vertex> forced;
    if (depth == 1) {
      // The start vertex keeps one required edge for the closing step.
      if (req(0).size() > 2) return false;
      if (req(0).size() == 2) return try_candidates(u, req(0));
    } else {
      for (Vertex r : req(u)) {
        if (r == prev) continue;
        if (is_visited(r) || forced) return false;
        forced = r;
      }
    }
    if (forced) {
      const Vertex only[] = {*forced};
      return try_candidates(u, only);
    }
    return try_candidates(u, g_.neighbors(u));
  }

  bool try_candidates(Vertex u, std::span<const Vertex> candidates) {
    for (Vertex v : candidates) {
      if (is_visited(v)) continue;
      visited_[static_cast<std::size_t>(v)] = true;
      path_.push_back(v);
      const bool stop = extend(v, u);
      path_.pop_back();
      visited_[static_cast<std::size_t>(v)] = false;
      if (stop) return true;
    }
    return false;
  }

  bool close(Vertex last, Vertex prev) {
    if (!g_.adjacent(last, 0)) return false;
    for (Vertex r : req(last)) {
      if (r != prev && r != 0) return false;
    }
    for (Vertex r : req(0)) {
      if (r != path_[1] && r != last) return false;
    }
    if (canonical_only_ && path_[1] > last) return false;
    return (*visit_)(path_);
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<Vertex>> required_;
  std::vector<bool> visited_;
  std::vector<Vertex> path_;
  const Visitor* visit_ = nullptr;
  bool canonical_only_ = false;
  std::uint64_t nodes_ = 0;
};

// True when the required edges can still be part of a Hamiltonian cycle as
// far as degrees and premature cycles go.
bool required_edges_plausible(const Graph& g, ElementMask required) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> degree(n, 0);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto count = static_cast<std::size_t>(std::popcount(required));
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!(required & element_bit(i))) continue;
    const auto u = static_cast<std::size_t>(g.edge(i).u);
    const auto v = static_cast<std::size_t>(g.edge(i).v);
    if (++degree[u] > 2 || ++degree[v] > 2) return false;
    const auto ru = find(u);
    const auto rv = find(v);
    if (ru == rv && count < n) return false;
    parent[ru] = rv;
  }
  return true;
}

class SatSearch {
 public:
  explicit SatSearch(const CnfFormula& f) : f_(f) {}

  // Visits each total model reachable from the assignment; stops when visit
  // returns true.
  bool run(Assignment a, const std::function<bool(const Assignment&)>& visit) {
    ++nodes_;
    if (!propagate(a)) return false;
    int var = -1;
    for (int v = 0; v < a.num_vars(); ++v) {
      if (!a.value(v)) {
        var = v;
        break;
      }
    }
    if (var < 0) return visit(a);
    for (bool value : {true, false}) {
      Assignment next = a;
      next.set(var, value);
      if (run(std::move(next), visit)) return true;
    }
    return false;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // Unit propagation; false on a falsified clause.
  bool propagate(Assignment& a) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : f_.clauses()) {
        if (a.satisfies(clause)) continue;
        const Literal* open = nullptr;
        int unassigned = 0;
        for (const auto& lit : clause) {
          if (!a.value(lit.var)) {
            ++unassigned;
            open = &lit;
          }
        }
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          a.set(open->var, open->positive);
          changed = true;
        }
      }
    }
    return true;
  }

  const CnfFormula& f_;
  std::uint64_t nodes_ = 0;
};

void require_literal_capacity(const CnfFormula& f) {
  if (2 * static_cast<std::size_t>(f.num_vars()) > kMaxOracleElements) {
    throw CapacityError("satisfiability oracle supports at most 32 variables");
  }
}

}  // namespace

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kMisp:
      return "misp";
    case ProblemKind::kHcp:
      return "hcp";
    case ProblemKind::kSat:
      return "sat";
    case ProblemKind::kFamily:
      return "family";
  }
  return "unknown";
}

OracleVerdict misp_member(const Graph& g, ElementMask vertices) {
  require_vertex_capacity(g);
  OracleVerdict verdict{true, 0};
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    if (!(vertices & element_bit(static_cast<std::size_t>(a)))) continue;
    for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
      if (!(vertices & element_bit(static_cast<std::size_t>(b)))) continue;
      ++verdict.work;
      if (g.adjacent(a, b)) {
        verdict.member = false;
        return verdict;
      }
    }
  }
  return verdict;
}

OracleVerdict misp_extend(const Graph& g, const PartialSolution& partial, Vertex v) {
  require_kind(partial, ProblemKind::kMisp);
  require_vertex_capacity(g);
  if (v < 0 || v >= g.vertex_count()) throw ContractError("vertex out of range");
  if (partial.elements & element_bit(static_cast<std::size_t>(v))) {
    throw ContractError("vertex " + std::to_string(v + 1) + " is already chosen");
  }
  OracleVerdict verdict{true, 0};
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (!(partial.elements & element_bit(static_cast<std::size_t>(u)))) continue;
    ++verdict.work;
    if (g.adjacent(u, v)) {
      verdict.member = false;
      break;
    }
  }
  return verdict;
}

OracleVerdict hcp_member(const Graph& g, ElementMask edges) {
  require_edge_capacity(g);
  if (g.edge_count() < 64 && (edges >> g.edge_count()) != 0) throw ContractError("edge out of range");
  if (!required_edges_plausible(g, edges)) return {false, 1};
  HamiltonSearch search(g, edges);
  const bool found = search.run([](std::span<const Vertex>) { return true; }, false);
  return {found, search.nodes()};
}

OracleVerdict hcp_extend(const Graph& g, const PartialSolution& partial, std::size_t edge) {
  require_kind(partial, ProblemKind::kHcp);
  if (edge >= g.edge_count()) throw ContractError("edge out of range");
  return hcp_member(g, partial.elements | element_bit(edge));
}

OracleVerdict sat_member(const CnfFormula& f, ElementMask literals) {
  require_literal_capacity(f);
  const auto start = Assignment::from_literals(literals, f.num_vars());
  if (!start) return {false, 1};
  SatSearch search(f);
  const bool found = search.run(*start, [](const Assignment&) { return true; });
  return {found, search.nodes()};
}

OracleVerdict sat_extend(const CnfFormula& f, const PartialSolution& partial, Literal literal) {
  require_kind(partial, ProblemKind::kSat);
  if (literal.var < 0 || literal.var >= f.num_vars()) throw ContractError("literal out of range");
  return sat_member(f, partial.elements | element_bit(literal.index()));
}

std::vector<std::vector<Vertex>> enumerate_hamiltonian_cycles(const Graph& g) {
  std::vector<std::vector<Vertex>> cycles;
  HamiltonSearch search(g, 0);
  search.run(
      [&](std::span<const Vertex> path) {
        cycles.emplace_back(path.begin(), path.end());
        return false;
      },
      true);
  return cycles;
}

ElementMask cycle_edge_mask(const Graph& g, std::span<const Vertex> cycle) {
  require_edge_capacity(g);
  ElementMask mask = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto id = g.edge_index(cycle[i], cycle[(i + 1) % cycle.size()]);
    if (!id) throw ContractError("cycle uses a missing edge");
    mask |= element_bit(*id);
  }
  return mask;
}

std::vector<ElementMask> enumerate_models(const CnfFormula& f) {
  require_literal_capacity(f);
  std::vector<ElementMask> models;
  SatSearch search(f);
  search.run(Assignment(f.num_vars()), [&](const Assignment& a) {
    models.push_back(a.literals());
    return false;
  });
  return models;
}

}  // namespace hlab
