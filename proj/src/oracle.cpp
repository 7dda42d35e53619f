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

#include "hlab/oracle.hpp"

#include <algorithm>
#include <functional>

#include "hlab/errors.hpp"

namespace hlab {

namespace {

ElementMask element_bit(std::size_t i) { return ElementMask{1} << i; }

}  // namespace

OracleVerdict IndependenceOracle::record(OracleVerdict verdict) {
  ++queries_;
  total_work_ += verdict.work;
  return verdict;
}

OracleVerdict IndependenceOracle::member(ElementMask set) { return record(evaluate_member(set)); }

OracleVerdict IndependenceOracle::extend(ElementMask partial, std::size_t element) {
  if (element >= element_count()) throw ContractError("element out of range");
  return record(evaluate_extend(partial, element));
}

std::vector<ElementMask> IndependenceOracle::support_solutions() {
  return support_solutions_by_search(*this);
}

std::string IndependenceOracle::format(ElementMask set) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < element_count(); ++i) {
    if (!(set & element_bit(i))) continue;
    if (!first) out += ',';
    out += element_label(i);
    first = false;
  }
  return out + "}";
}

std::vector<ElementMask> support_solutions_by_search(IndependenceOracle& oracle) {
  std::vector<ElementMask> supports;
  if (!oracle.member(0).member) return supports;
  const auto m = oracle.element_count();
  // Every member is reached exactly once: its elements added in ascending order.
  std::function<void(ElementMask, std::size_t)> walk = [&](ElementMask set, std::size_t from) {
    bool maximal = true;
    for (std::size_t r = 0; r < m; ++r) {
      if (set & element_bit(r)) continue;
      if (!oracle.extend(set, r).member) continue;
      maximal = false;
      if (r >= from) walk(set | element_bit(r), r + 1);
    }
    if (maximal) supports.push_back(set);
  };
  walk(0, 0);
  std::sort(supports.begin(), supports.end());
  return supports;
}

ElementMask dead_elements(IndependenceOracle& oracle) {
  oracle.require_enumerable();
  ElementMask dead = 0;
  for (std::size_t r = 0; r < oracle.element_count(); ++r) {
    if (!oracle.member(element_bit(r)).member) dead |= element_bit(r);
  }
  return dead;
}

MispOracle::MispOracle(Graph g) : g_(std::move(g)) {
  if (element_count() > kMaxOracleElements) throw CapacityError("MISP oracle supports at most 64 vertices");
}

std::string MispOracle::element_label(std::size_t element) const { return "x" + std::to_string(element + 1); }

void MispOracle::require_enumerable() const {
  if (element_count() > kMaxSupportMispVertices) {
    throw CapacityError("MISP enumeration supports at most " + std::to_string(kMaxSupportMispVertices) +
                        " vertices");
  }
}

OracleVerdict MispOracle::evaluate_member(ElementMask set) const { return misp_member(g_, set); }

OracleVerdict MispOracle::evaluate_extend(ElementMask partial, std::size_t element) const {
  return misp_extend(g_, {ProblemKind::kMisp, partial}, static_cast<Vertex>(element));
}

HcpOracle::HcpOracle(Graph g) : g_(std::move(g)) {
  if (element_count() > kMaxOracleElements) throw CapacityError("HCP oracle supports at most 64 edges");
}

std::string HcpOracle::element_label(std::size_t element) const { return "e" + std::to_string(element + 1); }

void HcpOracle::require_enumerable() const {
  if (instance_size() > kMaxSupportHcpVertices) {
    throw CapacityError("HCP enumeration supports at most " + std::to_string(kMaxSupportHcpVertices) +
                        " vertices");
  }
}

std::vector<ElementMask> HcpOracle::support_solutions() {
  // Maximal members are exactly the full cycles: every member lies inside one
  // and distinct cycles are incomparable.
  std::vector<ElementMask> supports;
  for (const auto& cycle : enumerate_hamiltonian_cycles(g_)) supports.push_back(cycle_edge_mask(g_, cycle));
  std::sort(supports.begin(), supports.end());
  return supports;
}

OracleVerdict HcpOracle::evaluate_member(ElementMask set) const { return hcp_member(g_, set); }

OracleVerdict HcpOracle::evaluate_extend(ElementMask partial, std::size_t element) const {
  return hcp_extend(g_, {ProblemKind::kHcp, partial}, element);
}

SatOracle::SatOracle(CnfFormula f) : f_(std::move(f)) {
  if (element_count() > kMaxOracleElements) throw CapacityError("SAT oracle supports at most 32 variables");
}

std::string SatOracle::element_label(std::size_t element) const {
  const auto lit = Literal::from_index(element);
  return (lit.positive ? "x" : "~x") + std::to_string(lit.var + 1);
}

void SatOracle::require_enumerable() const {
  if (instance_size() > kMaxSupportSatVars) {
    throw CapacityError("SAT enumeration supports at most " + std::to_string(kMaxSupportSatVars) +
                        " variables");
  }
}

std::vector<ElementMask> SatOracle::support_solutions() {
  auto models = enumerate_models(f_);
  std::sort(models.begin(), models.end());
  return models;
}

OracleVerdict SatOracle::evaluate_member(ElementMask set) const { return sat_member(f_, set); }

OracleVerdict SatOracle::evaluate_extend(ElementMask partial, std::size_t element) const {
  return sat_extend(f_, {ProblemKind::kSat, partial}, Literal::from_index(element));
}

OracleVerdict FamilyOracle::evaluate_member(ElementMask set) const {
  if (set >> family_.ground().size()) return {false, 1};
  return {family_.contains(static_cast<Mask>(set)), 1};
}

OracleVerdict FamilyOracle::evaluate_extend(ElementMask partial, std::size_t element) const {
  return evaluate_member(partial | element_bit(element));
}

}  // namespace hlab
