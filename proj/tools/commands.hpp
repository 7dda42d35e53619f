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

#ifndef HLAB_TOOLS_COMMANDS_HPP_
#define HLAB_TOOLS_COMMANDS_HPP_

// Subcommands of the hlab tool. Each returns the report text and the process
// exit code; errors surface as exceptions and map to exit code 2 in run().

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hlab/problems.hpp"

namespace hlab::cli {

enum class Format { kJson, kCsv, kText };

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

// Size caps after applying HLAB_MAX_N (which can only lower them).
struct Caps {
  std::size_t ground = 24;
  std::size_t cover_vertices = 10;
  std::size_t growth = 64;

  static Caps from_environment();
};

CommandResult cmd_matroid(const std::string& family_text, const std::string& family_id, Format format,
                          const Caps& caps);
CommandResult cmd_greedy(const std::string& family_text, const std::string& family_id,
                         const std::vector<std::int64_t>& weights, Format format, const Caps& caps);
CommandResult cmd_figure1(Format format);
CommandResult cmd_mvdccp(const std::string& graph_text, Format format, const Caps& caps);
CommandResult cmd_classify(ProblemKind kind, std::size_t min_n, std::size_t max_n, std::uint64_t seed,
                           std::size_t instances, Format format, const Caps& caps);

struct TraceRequest {
  ProblemKind kind = ProblemKind::kMisp;
  std::string input_text;
  std::string policy = "first";
  std::vector<std::size_t> order;  // 1-based element numbers
  std::uint64_t seed = 0;
};
CommandResult cmd_trace(const TraceRequest& request, Format format);

struct VerdictInput {
  ProblemKind kind;
  std::string name;
  std::string text;
};
// With no inputs the sheet covers the example graph under MISP and HCP.
CommandResult cmd_verdicts(const std::vector<VerdictInput>& inputs, Format format);

// Full command-line entry point: parses args (without the program name),
// writes the report to --out or out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlab::cli

#endif  // HLAB_TOOLS_COMMANDS_HPP_
