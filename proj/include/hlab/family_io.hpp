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

#ifndef HLAB_FAMILY_IO_HPP_
#define HLAB_FAMILY_IO_HPP_

// Family file format:
//
//   ground 4
//   set 0 1
//   set 2
//
// "ground n" first, then one "set" line per maximal set (0-based indices).
// Blank lines and lines starting with '#' are ignored. Loading applies the
// downward closure.

#include <string>
#include <string_view>

#include <json.hpp>

#include "hlab/set_family.hpp"

namespace hlab {

SetFamily parse_family(std::string_view text);

// Writes the maximal members, so parse_family(write_family(f)) == f for any
// hereditary f.
std::string write_family(const SetFamily& family);

// {family_id, hereditary, exchange, violation?}. Exchange is only evaluated
// for hereditary families; it is null otherwise.
nlohmann::ordered_json family_report(const std::string& family_id, const SetFamily& family);

}  // namespace hlab

#endif  // HLAB_FAMILY_IO_HPP_
