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

#include "hlab/family_io.hpp"

#include <sstream>
#include <vector>

#include "hlab/errors.hpp"
#include "text.hpp"

namespace hlab {

namespace {

nlohmann::ordered_json mask_json(const GroundSet& ground, Mask m) {
  auto out = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (m >> i & 1u) out.push_back(i);
  }
  return out;
}

}  // namespace

SetFamily parse_family(std::string_view text) {
  std::optional<GroundSet> ground;
  std::vector<Mask> sets;
  for (const auto& [line_no, words] : text::split_lines(text)) {
    if (words.front().starts_with('#')) continue;
    if (words.front() == "ground") {
      if (ground) throw ParseError(line_no, "duplicate ground line");
      if (words.size() != 2) throw ParseError(line_no, "expected 'ground n'");
      const auto n = text::parse_int<std::size_t>(words[1], line_no);
      if (n > kMaxGroundSize) {
        throw CapacityError("ground set of " + std::to_string(n) +
                            " elements exceeds the limit of " + std::to_string(kMaxGroundSize));
      }
      ground.emplace(n);
    } else if (words.front() == "set") {
      if (!ground) throw ParseError(line_no, "'set' before 'ground'");
      Mask m = 0;
      for (std::size_t w = 1; w < words.size(); ++w) {
        const auto index = text::parse_int<std::size_t>(words[w], line_no);
        if (index >= ground->size()) {
          throw ParseError(line_no, "element " + std::to_string(index) + " out of range");
        }
        m |= Mask{1} << index;
      }
      sets.push_back(m);
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(words.front()) + "'");
    }
  }
  if (!ground) throw ParseError(0, "missing 'ground n' line");
  return downward_closure(*ground, sets);
}

std::string write_family(const SetFamily& family) {
  std::ostringstream out;
  out << "ground " << family.ground().size() << '\n';
  for (Mask m : maximal_members(family)) {
    out << "set";
    for (std::size_t i = 0; i < family.ground().size(); ++i) {
      if (m >> i & 1u) out << ' ' << i;
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::ordered_json family_report(const std::string& family_id, const SetFamily& family) {
  nlohmann::ordered_json report;
  report["family_id"] = family_id;
  const auto heredity = find_heredity_violation(family);
  report["hereditary"] = !heredity.has_value();
  if (heredity) {
    report["exchange"] = nullptr;
    report["heredity_witness"] = {{"member", mask_json(family.ground(), heredity->member)},
                                  {"missing", mask_json(family.ground(), heredity->missing_subset)}};
    return report;
  }
  const auto violation = find_exchange_violation(family);
  report["exchange"] = !violation.has_value();
  if (violation) {
    report["violation"] = {{"pi1", mask_json(family.ground(), violation->smaller)},
                           {"pi2", mask_json(family.ground(), violation->larger)}};
  }
  return report;
}

}  // namespace hlab
