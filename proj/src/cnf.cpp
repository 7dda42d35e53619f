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

#include "hlab/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "hlab/errors.hpp"
#include "hlab/random.hpp"
#include "text.hpp"

namespace hlab {

CnfFormula::CnfFormula(int num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ < 0) throw ContractError("negative variable count");
  for (auto& clause : clauses_) {
    if (clause.empty()) throw ContractError("empty clause");
    Clause unique;
    for (const auto& lit : clause) {
      if (lit.var < 0 || lit.var >= num_vars_) throw ContractError("variable out of range");
      if (std::find(unique.begin(), unique.end(), lit) == unique.end()) unique.push_back(lit);
    }
    clause = std::move(unique);
  }
}

std::optional<Assignment> Assignment::from_literals(std::uint64_t literal_mask, int num_vars) {
  Assignment a(num_vars);
  for (std::size_t i = 0; i < 64; ++i) {
    if (!(literal_mask >> i & 1)) continue;
    const auto lit = Literal::from_index(i);
    if (lit.var >= num_vars) throw ContractError("literal out of range");
    if (a.value(lit.var).has_value()) return std::nullopt;
    a.set(lit.var, lit.positive);
  }
  return a;
}

bool Assignment::total() const {
  return std::all_of(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); });
}

std::uint64_t Assignment::literals() const {
  std::uint64_t mask = 0;
  for (std::size_t v = 0; v < values_.size(); ++v) {
    if (values_[v]) mask |= std::uint64_t{1} << Literal{static_cast<int>(v), *values_[v]}.index();
  }
  return mask;
}

bool Assignment::satisfies(const Clause& clause) const {
  return std::any_of(clause.begin(), clause.end(), [&](const Literal& lit) {
    const auto v = value(lit.var);
    return v && *v == lit.positive;
  });
}

CnfFormula parse_cnf(std::string_view text) {
  std::optional<std::pair<int, std::size_t>> header;
  std::vector<Clause> clauses;
  Clause pending;
  std::size_t last_line = 0;
  for (const auto& [line_no, words] : text::split_lines(text)) {
    last_line = line_no;
    if (words.front() == "c") continue;
    if (words.front() == "%") break;
    if (words.front() == "p") {
      if (header) throw ParseError(line_no, "duplicate problem line");
      if (words.size() != 4 || words[1] != "cnf") throw ParseError(line_no, "expected 'p cnf V C'");
      const int vars = text::parse_int<int>(words[2], line_no);
      const auto count = text::parse_int<std::size_t>(words[3], line_no);
      if (vars < 0) throw ParseError(line_no, "negative variable count");
      header.emplace(vars, count);
      continue;
    }
    if (!header) throw ParseError(line_no, "clause before 'p cnf' header");
    for (const auto word : words) {
      const int value = text::parse_int<int>(word, line_no);
      if (value == 0) {
        if (pending.empty()) throw ParseError(line_no, "empty clause");
        clauses.push_back(std::move(pending));
        pending.clear();
        continue;
      }
      const int var = std::abs(value);
      if (var > header->first) throw ParseError(line_no, "variable " + std::to_string(var) + " out of range");
      pending.push_back({var - 1, value > 0});
    }
  }
  if (!header) throw ParseError(last_line, "missing 'p cnf' header");
  if (!pending.empty()) throw ParseError(last_line, "last clause is not terminated by 0");
  if (clauses.size() != header->second) {
    throw ParseError(last_line, "header declares " + std::to_string(header->second) +
                                    " clauses, found " + std::to_string(clauses.size()));
  }
  return CnfFormula(header->first, std::move(clauses));
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars() << ' ' << f.clauses().size() << '\n';
  for (const auto& clause : f.clauses()) {
    for (const auto& lit : clause) out << (lit.positive ? lit.var + 1 : -(lit.var + 1)) << ' ';
    out << "0\n";
  }
  return out.str();
}

namespace {

Clause random_clause(Rng& rng, int num_vars) {
  Clause clause;
  while (clause.size() < 3) {
    const int var = static_cast<int>(rng.below(static_cast<std::uint64_t>(num_vars)));
    if (std::any_of(clause.begin(), clause.end(), [&](const Literal& l) { return l.var == var; })) continue;
    clause.push_back({var, rng.chance(1, 2)});
  }
  return clause;
}

void require_three_vars(int num_vars) {
  if (num_vars < 3) throw ContractError("3-CNF needs at least 3 variables");
}

}  // namespace

CnfFormula random_3cnf(int num_vars, std::size_t num_clauses, std::uint64_t seed) {
  require_three_vars(num_vars);
  Rng rng(seed);
  std::vector<Clause> clauses;
  for (std::size_t i = 0; i < num_clauses; ++i) clauses.push_back(random_clause(rng, num_vars));
  return CnfFormula(num_vars, std::move(clauses));
}

CnfFormula random_planted_3cnf(int num_vars, std::size_t num_clauses, std::uint64_t seed) {
  require_three_vars(num_vars);
  Rng rng(seed);
  std::vector<bool> hidden(static_cast<std::size_t>(num_vars));
  for (auto&& v : hidden) v = rng.chance(1, 2);
  std::vector<Clause> clauses;
  while (clauses.size() < num_clauses) {
    auto clause = random_clause(rng, num_vars);
    const bool agrees = std::any_of(clause.begin(), clause.end(), [&](const Literal& l) {
      return hidden[static_cast<std::size_t>(l.var)] == l.positive;
    });
    if (agrees) clauses.push_back(std::move(clause));
  }
  return CnfFormula(num_vars, std::move(clauses));
}

}  // namespace hlab
