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

#include "hlab/cycle_cover.hpp"

#include <algorithm>
#include <sstream>

#include "hlab/errors.hpp"

namespace hlab {

namespace {

void require_cover_capacity(const Graph& g) {
  if (g.vertex_count() > kMaxCoverVertices) {
    throw CapacityError("cycle-cover enumeration supports at most " + std::to_string(kMaxCoverVertices) +
                        " vertices");
  }
}

std::vector<std::vector<Vertex>> encoding(const CycleCoverPartition& cover) {
  std::vector<std::vector<Vertex>> out;
  out.reserve(cover.parts.size());
  for (const auto& p : cover.parts) out.push_back(p.vertices);
  return out;
}

std::size_t cycle_count(const Permutation& sigma, std::vector<bool>& seen) {
  seen.assign(sigma.size(), false);
  std::size_t count = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j])) seen[j] = true;
  }
  return count;
}

}  // namespace

bool AssignmentMatrix::symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Vertex v : image_) {
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || hit[static_cast<std::size_t>(v)]) {
      throw ContractError("not a permutation");
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
}

AssignmentMatrix assignment_matrix(const Graph& g) {
  AssignmentMatrix m(g.vertex_count());
  for (const auto& e : g.edges()) {
    m.set(e.u, e.v, 1);
    m.set(e.v, e.u, 1);
  }
  return m;
}

std::string format_matrix(const AssignmentMatrix& m, const Permutation* sigma) {
  std::ostringstream out;
  auto cell = [](const std::string& s) { return std::string(5 - std::min<std::size_t>(s.size(), 4), ' ') + s; };
  out << "    ";
  for (int j = 0; j < m.size(); ++j) out << cell("x" + std::to_string(j + 1));
  out << '\n';
  for (int i = 0; i < m.size(); ++i) {
    out << cell("x" + std::to_string(i + 1)).substr(1);
    for (int j = 0; j < m.size(); ++j) {
      const bool chosen = sigma && (*sigma)[static_cast<std::size_t>(i)] == j;
      const std::string value = std::to_string(m(i, j));
      out << cell(chosen ? "(" + value + ")" : value);
    }
    out << '\n';
  }
  return out.str();
}

CycleCoverPartition cover_from_permutation(const Graph& g, const Permutation& sigma) {
  if (sigma.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw ContractError("permutation size does not match the graph");
  }
  CycleCoverPartition cover;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> walk;
    for (auto i = start; !seen[i]; i = static_cast<std::size_t>(sigma[i])) {
      seen[i] = true;
      const auto next = sigma[i];
      if (next == static_cast<Vertex>(i)) {
        throw ContractError("fixed point at x" + std::to_string(i + 1) + " (loops are not allowed)");
      }
      if (!g.adjacent(static_cast<Vertex>(i), next)) {
        throw ContractError("sigma maps x" + std::to_string(i + 1) + " to non-neighbour x" +
                            std::to_string(next + 1));
      }
      walk.push_back(static_cast<Vertex>(i));
    }
    const auto kind = walk.size() == 2 ? CoverPart::Kind::kEdge : CoverPart::Kind::kCycle;
    cover.parts.push_back({kind, std::move(walk)});
  }
  validate_cover(g, cover);
  return cover;
}

Permutation permutation_from_cover(const CycleCoverPartition& cover, int vertex_count) {
  std::vector<Vertex> image(static_cast<std::size_t>(vertex_count), -1);
  for (const auto& part : cover.parts) {
    const auto& vs = part.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i] < 0 || vs[i] >= vertex_count) throw ContractError("cover vertex out of range");
      image[static_cast<std::size_t>(vs[i])] = vs[(i + 1) % vs.size()];
    }
  }
  return Permutation(std::move(image));
}

CycleCoverPartition canonical(CycleCoverPartition cover) {
  for (auto& part : cover.parts) {
    auto& vs = part.vertices;
    std::rotate(vs.begin(), std::min_element(vs.begin(), vs.end()), vs.end());
    if (vs.size() > 2 && vs[1] > vs.back()) std::reverse(vs.begin() + 1, vs.end());
    if (vs.size() == 2 && vs[0] > vs[1]) std::swap(vs[0], vs[1]);
  }
  std::sort(cover.parts.begin(), cover.parts.end(),
            [](const CoverPart& a, const CoverPart& b) { return a.vertices < b.vertices; });
  return cover;
}

void validate_cover(const Graph& g, const CycleCoverPartition& cover) {
  std::vector<bool> covered(static_cast<std::size_t>(g.vertex_count()), false);
  for (const auto& part : cover.parts) {
    const auto& vs = part.vertices;
    const bool shape_ok = part.kind == CoverPart::Kind::kEdge ? vs.size() == 2 : vs.size() >= 3;
    if (!shape_ok) throw ContractError("malformed cover part");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const Vertex v = vs[i];
      if (v < 0 || v >= g.vertex_count()) throw ContractError("cover vertex out of range");
      if (covered[static_cast<std::size_t>(v)]) throw ContractError("cover parts are not vertex-disjoint");
      covered[static_cast<std::size_t>(v)] = true;
      const bool closing = i + 1 == vs.size();
      if (closing && part.kind == CoverPart::Kind::kEdge) continue;
      if (!g.adjacent(v, vs[(i + 1) % vs.size()])) throw ContractError("cover uses a missing edge");
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw ContractError("cover misses a vertex");
  }
}

ElementMask cover_edge_mask(const Graph& g, const CycleCoverPartition& cover) {
  ElementMask mask = 0;
  for (const auto& part : cover.parts) {
    const auto& vs = part.vertices;
    const std::size_t steps = part.kind == CoverPart::Kind::kEdge ? 1 : vs.size();
    for (std::size_t i = 0; i < steps; ++i) {
      const auto id = g.edge_index(vs[i], vs[(i + 1) % vs.size()]);
      if (!id) throw ContractError("cover uses a missing edge");
      if (*id >= kMaxOracleElements) throw CapacityError("edge index exceeds mask width");
      mask |= ElementMask{1} << *id;
    }
  }
  return mask;
}

void for_each_assignment_solution(const Graph& g, const std::function<void(const Permutation&)>& visit) {
  require_cover_capacity(g);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<Vertex> image(n, -1);
  std::vector<bool> used(n, false);
  // Row i picks an unused column among its neighbours (zero diagonal).
  std::function<void(std::size_t)> assign = [&](std::size_t row) {
    if (row == n) {
      visit(Permutation(image));
      return;
    }
    for (Vertex col : g.neighbors(static_cast<Vertex>(row))) {
      if (used[static_cast<std::size_t>(col)]) continue;
      used[static_cast<std::size_t>(col)] = true;
      image[row] = col;
      assign(row + 1);
      used[static_cast<std::size_t>(col)] = false;
    }
  };
  if (n > 0) assign(0);
}

std::vector<Permutation> enumerate_assignment_solutions(const Graph& g) {
  std::vector<Permutation> out;
  for_each_assignment_solution(g, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::optional<CycleCoverPartition> min_cycle_cover(const Graph& g) {
  std::optional<CycleCoverPartition> best;
  std::optional<std::vector<std::vector<Vertex>>> best_code;
  std::vector<bool> scratch;
  for_each_assignment_solution(g, [&](const Permutation& sigma) {
    const auto parts = cycle_count(sigma, scratch);
    if (best && parts > best->part_count()) return;
    auto cover = canonical(cover_from_permutation(g, sigma));
    auto code = encoding(cover);
    if (!best || parts < best->part_count() || code < *best_code) {
      best = std::move(cover);
      best_code = std::move(code);
    }
  });
  return best;
}

LemmaHmcReport lemma_hmc_check(const Graph& g) {
  require_cover_capacity(g);
  LemmaHmcReport report;
  const auto verdict = hcp_member(g, 0);
  report.hamiltonian = verdict.member;
  report.hcp_work = verdict.work;
  report.min_cover = min_cycle_cover(g);
  if (report.min_cover && report.min_cover->part_count() == 1) {
    const auto& part = report.min_cover->parts.front();
    if (part.kind == CoverPart::Kind::kCycle &&
        part.vertices.size() == static_cast<std::size_t>(g.vertex_count())) {
      report.single_hamiltonian_part = hcp_member(g, cover_edge_mask(g, *report.min_cover)).member;
    }
  }
  report.holds = !report.hamiltonian || report.single_hamiltonian_part;
  return report;
}

GreedyCoverReport greedy_cover_probe(const Graph& g, std::span<const std::size_t> ordering) {
  require_cover_capacity(g);
  std::vector<std::size_t> sorted(ordering.begin(), ordering.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw ContractError("ordering must be a permutation of the edge indices");
  }
  if (sorted.size() != g.edge_count()) throw ContractError("ordering must list every edge once");

  const auto n = static_cast<std::size_t>(g.vertex_count());
  GreedyCoverReport report;
  std::vector<std::vector<Vertex>> chosen(n);
  for (std::size_t id : ordering) {
    const auto& e = g.edge(id);
    auto& cu = chosen[static_cast<std::size_t>(e.u)];
    auto& cv = chosen[static_cast<std::size_t>(e.v)];
    if (cu.size() >= 2 || cv.size() >= 2) continue;
    cu.push_back(e.v);
    cv.push_back(e.u);
    report.accepted_edges.push_back(id);
  }

  // Components of max-degree-2 subgraph: paths or cycles.
  CycleCoverPartition cover;
  std::vector<bool> seen(n, false);
  bool valid = true;
  for (std::size_t s = 0; s < n && valid; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      comp.push_back(static_cast<Vertex>(v));
      for (Vertex w : chosen[v]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(static_cast<std::size_t>(w));
        }
      }
    }
    const bool all_two = std::all_of(comp.begin(), comp.end(),
                                     [&](Vertex v) { return chosen[static_cast<std::size_t>(v)].size() == 2; });
    if (comp.size() == 2 && chosen[s].size() == 1) {
      cover.parts.push_back({CoverPart::Kind::kEdge, comp});
    } else if (comp.size() >= 3 && all_two) {
      // Walk the cycle in order.
      std::vector<Vertex> walk{static_cast<Vertex>(s)};
      Vertex prev = -1;
      Vertex cur = static_cast<Vertex>(s);
      while (walk.size() < comp.size()) {
        const auto& nb = chosen[static_cast<std::size_t>(cur)];
        const Vertex next = nb[0] != prev ? nb[0] : nb[1];
        prev = cur;
        cur = next;
        walk.push_back(cur);
      }
      cover.parts.push_back({CoverPart::Kind::kCycle, std::move(walk)});
    } else {
      valid = false;
    }
  }
  if (valid) {
    cover = canonical(std::move(cover));
    validate_cover(g, cover);
    report.cover = std::move(cover);
  }
  if (const auto best = min_cycle_cover(g)) report.optimum_parts = best->part_count();
  report.reached_optimum =
      report.cover && report.optimum_parts && report.cover->part_count() == *report.optimum_parts;
  return report;
}

nlohmann::ordered_json cover_to_json(const CycleCoverPartition& cover) {
  nlohmann::ordered_json parts = nlohmann::ordered_json::array();
  for (const auto& part : cover.parts) {
    nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
    for (Vertex v : part.vertices) vertices.push_back(v + 1);
    parts.push_back({{"type", part.kind == CoverPart::Kind::kEdge ? "edge" : "cycle"},
                     {"vertices", std::move(vertices)}});
  }
  return {{"parts", std::move(parts)}};
}

}  // namespace hlab
