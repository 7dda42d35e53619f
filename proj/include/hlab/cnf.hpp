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

#ifndef HLAB_CNF_HPP_
#define HLAB_CNF_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hlab {

// Variables are 0-based internally, 1-based (signed) in DIMACS text.
struct Literal {
  int var;
  bool positive;

  // Position in the literal ground set: x_v -> 2v, not x_v -> 2v + 1.
  std::size_t index() const { return 2 * static_cast<std::size_t>(var) + (positive ? 0 : 1); }
  Literal contrary() const { return {var, !positive}; }
  static Literal from_index(std::size_t index) {
    return {static_cast<int>(index / 2), index % 2 == 0};
  }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

class CnfFormula {
 public:
  CnfFormula() = default;
  // Clauses must be non-empty with in-range variables; repeated literals
  // inside a clause are dropped.
  CnfFormula(int num_vars, std::vector<Clause> clauses);

  int num_vars() const { return num_vars_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
};

// Possibly partial truth assignment; never holds both x and not x.
class Assignment {
 public:
  explicit Assignment(int num_vars) : values_(static_cast<std::size_t>(num_vars)) {}

  // Literal set as a bit mask over literal indices; nullopt when it contains
  // a contrary pair.
  static std::optional<Assignment> from_literals(std::uint64_t literal_mask, int num_vars);

  int num_vars() const { return static_cast<int>(values_.size()); }
  std::optional<bool> value(int var) const { return values_.at(static_cast<std::size_t>(var)); }
  void set(int var, bool v) { values_.at(static_cast<std::size_t>(var)) = v; }
  void clear(int var) { values_.at(static_cast<std::size_t>(var)).reset(); }
  bool total() const;
  std::uint64_t literals() const;

  // Clause is true under the (possibly partial) assignment.
  bool satisfies(const Clause& clause) const;

 private:
  std::vector<std::optional<bool>> values_;
};

// DIMACS CNF: "p cnf V C", clauses as 0-terminated integer runs.
CnfFormula parse_cnf(std::string_view text);
std::string to_dimacs(const CnfFormula& f);

// Uniform random 3-CNF (three distinct variables per clause).
CnfFormula random_3cnf(int num_vars, std::size_t num_clauses, std::uint64_t seed);

// Random 3-CNF in which every clause agrees with a hidden random total
// assignment, so the formula is satisfiable.
CnfFormula random_planted_3cnf(int num_vars, std::size_t num_clauses, std::uint64_t seed);

}  // namespace hlab

#endif  // HLAB_CNF_HPP_
