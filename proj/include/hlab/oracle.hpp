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

#ifndef HLAB_ORACLE_HPP_
#define HLAB_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hlab/cnf.hpp"
#include "hlab/graph.hpp"
#include "hlab/problems.hpp"
#include "hlab/set_family.hpp"

namespace hlab {

// Uniform view of a hereditary system (R, Q) through its membership and
// extension predicates. Elements of R are indexed 0..element_count()-1.
// Every query adds its work to running totals.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;

  virtual ProblemKind kind() const = 0;
  virtual std::size_t element_count() const = 0;
  virtual std::string element_label(std::size_t element) const = 0;
  // Natural size n of the instance: vertices, variables or ground elements.
  virtual std::size_t instance_size() const = 0;
  // Throws CapacityError when exhaustive enumeration is out of reach.
  virtual void require_enumerable() const = 0;

  OracleVerdict member(ElementMask set);
  // Is partial + element in Q? partial is assumed to be in Q.
  OracleVerdict extend(ElementMask partial, std::size_t element);

  std::uint64_t total_work() const { return total_work_; }
  std::uint64_t query_count() const { return queries_; }

  // Inclusion-maximal members, ascending by mask.
  virtual std::vector<ElementMask> support_solutions();

  std::string format(ElementMask set) const;

 protected:
  virtual OracleVerdict evaluate_member(ElementMask set) const = 0;
  virtual OracleVerdict evaluate_extend(ElementMask partial, std::size_t element) const = 0;

 private:
  OracleVerdict record(OracleVerdict verdict);

  std::uint64_t total_work_ = 0;
  std::uint64_t queries_ = 0;
};

// Generic support enumeration: walks Q by adding elements in increasing
// index order and keeps the members no element extends.
std::vector<ElementMask> support_solutions_by_search(IndependenceOracle& oracle);

inline std::vector<ElementMask> support_solutions(IndependenceOracle& oracle) {
  oracle.require_enumerable();
  return oracle.support_solutions();
}

// Elements r with {r} not in Q: no support solution contains them.
ElementMask dead_elements(IndependenceOracle& oracle);

inline constexpr std::size_t kMaxSupportMispVertices = 16;
inline constexpr std::size_t kMaxSupportHcpVertices = 10;
inline constexpr std::size_t kMaxSupportSatVars = 12;

class MispOracle : public IndependenceOracle {
 public:
  explicit MispOracle(Graph g);

  ProblemKind kind() const override { return ProblemKind::kMisp; }
  std::size_t element_count() const override { return static_cast<std::size_t>(g_.vertex_count()); }
  std::string element_label(std::size_t element) const override;
  std::size_t instance_size() const override { return element_count(); }
  void require_enumerable() const override;
  const Graph& graph() const { return g_; }

 protected:
  OracleVerdict evaluate_member(ElementMask set) const override;
  OracleVerdict evaluate_extend(ElementMask partial, std::size_t element) const override;

 private:
  Graph g_;
};

class HcpOracle : public IndependenceOracle {
 public:
  explicit HcpOracle(Graph g);

  ProblemKind kind() const override { return ProblemKind::kHcp; }
  std::size_t element_count() const override { return g_.edge_count(); }
  std::string element_label(std::size_t element) const override;
  std::size_t instance_size() const override { return static_cast<std::size_t>(g_.vertex_count()); }
  void require_enumerable() const override;
  // Edge sets of the Hamiltonian cycles.
  std::vector<ElementMask> support_solutions() override;
  const Graph& graph() const { return g_; }

 protected:
  OracleVerdict evaluate_member(ElementMask set) const override;
  OracleVerdict evaluate_extend(ElementMask partial, std::size_t element) const override;

 private:
  Graph g_;
};

class SatOracle : public IndependenceOracle {
 public:
  explicit SatOracle(CnfFormula f);

  ProblemKind kind() const override { return ProblemKind::kSat; }
  std::size_t element_count() const override { return 2 * static_cast<std::size_t>(f_.num_vars()); }
  std::string element_label(std::size_t element) const override;
  std::size_t instance_size() const override { return static_cast<std::size_t>(f_.num_vars()); }
  void require_enumerable() const override;
  // Literal sets of the satisfying total assignments.
  std::vector<ElementMask> support_solutions() override;
  const CnfFormula& formula() const { return f_; }

 protected:
  OracleVerdict evaluate_member(ElementMask set) const override;
  OracleVerdict evaluate_extend(ElementMask partial, std::size_t element) const override;

 private:
  CnfFormula f_;
};

// Explicit family; one lookup per query.
class FamilyOracle : public IndependenceOracle {
 public:
  explicit FamilyOracle(SetFamily family) : family_(std::move(family)) {}

  ProblemKind kind() const override { return ProblemKind::kFamily; }
  std::size_t element_count() const override { return family_.ground().size(); }
  std::string element_label(std::size_t element) const override { return family_.ground().label(element); }
  std::size_t instance_size() const override { return element_count(); }
  void require_enumerable() const override {}
  const SetFamily& family() const { return family_; }

 protected:
  OracleVerdict evaluate_member(ElementMask set) const override;
  OracleVerdict evaluate_extend(ElementMask partial, std::size_t element) const override;

 private:
  SetFamily family_;
};

}  // namespace hlab

#endif  // HLAB_ORACLE_HPP_
