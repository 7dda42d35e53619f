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

#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlab/cycle_cover.hpp"
#include "hlab/errors.hpp"
#include "hlab/family_io.hpp"
#include "hlab/oracle.hpp"
#include "hlab/random.hpp"
#include "hlab/sequential.hpp"
#include "hlab/set_family.hpp"

namespace hlab::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json mask_json(Mask m, std::size_t n) {
  Json out = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    if (m >> i & 1u) out.push_back(i);
  }
  return out;
}

Json edge_labels(ElementMask m, std::size_t count) {
  Json out = Json::array();
  for (std::size_t i = 0; i < count; ++i) {
    if (m >> i & 1u) out.push_back("e" + std::to_string(i + 1));
  }
  return out;
}

Json vertices_json(const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

void require_format(Format format, std::initializer_list<Format> allowed, const char* command) {
  if (std::find(allowed.begin(), allowed.end(), format) == allowed.end()) {
    throw ContractError(std::string("format not supported by '") + command + "'");
  }
}

SetFamily load_family(const std::string& text, const Caps& caps) {
  auto family = parse_family(text);
  if (family.ground().size() > caps.ground) {
    throw CapacityError("ground set exceeds the cap of " + std::to_string(caps.ground));
  }
  return family;
}

std::string parts_text(std::size_t n) { return std::to_string(n) + (n == 1 ? " part" : " parts"); }

std::string describe_cover(const CycleCoverPartition& cover) {
  std::string out;
  for (const auto& part : cover.parts) {
    if (!out.empty()) out += ' ';
    const bool edge = part.kind == CoverPart::Kind::kEdge;
    out += edge ? '{' : '(';
    for (std::size_t i = 0; i < part.vertices.size(); ++i) {
      if (i) out += ',';
      out += "x" + std::to_string(part.vertices[i] + 1);
    }
    out += edge ? '}' : ')';
  }
  return out;
}

Json lemma_json(const LemmaHmcReport& r) {
  return {{"hamiltonian", r.hamiltonian},
          {"hcp_search_nodes", r.hcp_work},
          {"min_cover_parts", r.min_cover ? Json(r.min_cover->part_count()) : Json(nullptr)},
          {"single_hamiltonian_part", r.single_hamiltonian_part},
          {"lemma_holds", r.holds}};
}

}  // namespace

Caps Caps::from_environment() {
  Caps caps;
  if (const char* env = std::getenv("HLAB_MAX_N"); env && *env) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (*end != '\0') throw ContractError("HLAB_MAX_N must be a non-negative integer");
    caps.ground = std::min<std::size_t>(caps.ground, value);
    caps.cover_vertices = std::min<std::size_t>(caps.cover_vertices, value);
    caps.growth = std::min<std::size_t>(caps.growth, value);
  }
  return caps;
}

CommandResult cmd_matroid(const std::string& family_text, const std::string& family_id, Format format,
                          const Caps& caps) {
  require_format(format, {Format::kJson, Format::kText}, "matroid");
  const auto family = load_family(family_text, caps);
  const bool matroid = is_matroid(family);
  CommandResult result{matroid ? 0 : 1, {}};
  if (format == Format::kJson) {
    auto report = family_report(family_id, family);
    report["members"] = family.size();
    Json maximal = Json::array();
    for (Mask m : maximal_members(family)) maximal.push_back(mask_json(m, family.ground().size()));
    report["maximal_sets"] = std::move(maximal);
    report["matroid"] = matroid;
    result.output = dump(report);
  } else {
    const auto& g = family.ground();
    std::ostringstream out;
    out << "family " << family_id << ": " << family.size() << " members over " << g.size() << " elements\n";
    out << "hereditary: yes\n";
    if (const auto v = find_exchange_violation(family)) {
      out << "exchange: no (pi1 = " << g.format(v->smaller) << ", pi2 = " << g.format(v->larger) << ")\n";
    } else {
      out << "exchange: yes\n";
    }
    out << "matroid: " << (matroid ? "yes" : "no") << '\n';
    result.output = out.str();
  }
  return result;
}

CommandResult cmd_greedy(const std::string& family_text, const std::string& family_id,
                         const std::vector<std::int64_t>& weights, Format format, const Caps& caps) {
  require_format(format, {Format::kJson, Format::kText}, "greedy");
  const auto family = load_family(family_text, caps);
  if (weights.size() != family.ground().size()) {
    throw ContractError("expected " + std::to_string(family.ground().size()) + " weights, got " +
                        std::to_string(weights.size()));
  }
  const WeightFunction w(weights);
  const auto g = greedy(family, w);
  const auto greedy_weight = weight_of(g.selection, w);
  const auto best = brute_force_max(family, w);
  const auto gap = best.weight - greedy_weight;
  const auto n = family.ground().size();

  CommandResult result{gap == 0 ? 0 : 1, {}};
  if (format == Format::kJson) {
    auto report = family_report(family_id, family);
    Json trace = Json::array();
    for (Mask m : g.trace) trace.push_back(mask_json(m, n));
    report["weights"] = weights;
    report["greedy"] = {{"set", mask_json(g.selection, n)}, {"weight", greedy_weight}, {"trace", std::move(trace)}};
    report["optimum"] = {{"set", mask_json(best.set, n)}, {"weight", best.weight}};
    report["greedy_gap"] = gap;
    result.output = dump(report);
  } else {
    const auto& ground = family.ground();
    std::ostringstream out;
    out << "greedy:  " << ground.format(g.selection) << " weight " << greedy_weight << '\n';
    out << "optimum: " << ground.format(best.set) << " weight " << best.weight << '\n';
    out << "gap: " << gap << '\n';
    result.output = out.str();
  }
  return result;
}

CommandResult cmd_figure1(Format format) {
  require_format(format, {Format::kJson, Format::kText}, "figure1");
  const auto g = figure1_graph();
  const auto matrix = assignment_matrix(g);
  const Permutation sigma_c({7, 0, 5, 2, 6, 3, 4, 1});
  const Permutation sigma_d({1, 2, 5, 4, 6, 3, 7, 0});
  const auto cover_c = cover_from_permutation(g, sigma_c);
  const auto cover_d = cover_from_permutation(g, sigma_d);
  const auto solutions = enumerate_assignment_solutions(g);
  const auto cycles = enumerate_hamiltonian_cycles(g);
  HcpOracle oracle(g);
  const auto supports = support_solutions(oracle);
  const auto dead = dead_elements(oracle);
  const auto lemma = lemma_hmc_check(g);

  std::vector<std::size_t> e4_first{3};
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (e != 3) e4_first.push_back(e);
  }
  const auto probe = greedy_cover_probe(g, e4_first);

  if (format == Format::kText) {
    std::ostringstream out;
    out << "graph (DIMACS)\n" << to_dimacs(g) << '\n';
    out << "edges\n";
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      out << "  e" << i + 1 << " = {x" << g.edge(i).u + 1 << ",x" << g.edge(i).v + 1 << "}\n";
    }
    out << "\nassignment matrix (c)\n" << format_matrix(matrix, &sigma_c);
    out << "cover (c): " << describe_cover(cover_c) << "  [" << parts_text(cover_c.part_count()) << "]\n";
    out << "\nassignment matrix (d)\n" << format_matrix(matrix, &sigma_d);
    out << "cover (d): " << describe_cover(cover_d) << "  [" << parts_text(cover_d.part_count()) << "]\n";
    out << "\nassignment solutions: " << solutions.size() << '\n';
    out << "hamiltonian cycles: " << cycles.size() << '\n';
    for (const auto& c : cycles) {
      out << "  ";
      for (Vertex v : c) out << 'x' << v + 1 << ' ';
      out << "edges " << oracle.format(cycle_edge_mask(g, c)) << '\n';
    }
    out << "dead edges: " << oracle.format(dead) << '\n';
    out << "min cycle cover: " << (lemma.min_cover ? describe_cover(*lemma.min_cover) : "infeasible") << '\n';
    out << "lemma (hamiltonian => 1-part cover): " << (lemma.holds ? "holds" : "fails") << '\n';
    out << "greedy probe starting at e4: " << (probe.reached_optimum ? "reached" : "missed") << " optimum\n";
    return {0, out.str()};
  }

  Json edges = Json::array();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    edges.push_back({{"label", "e" + std::to_string(i + 1)}, {"u", g.edge(i).u + 1}, {"v", g.edge(i).v + 1}});
  }
  auto solution_json = [&](const char* name, const Permutation& sigma, const CycleCoverPartition& cover) {
    Json image = Json::array();
    for (Vertex v : sigma.image()) image.push_back(v + 1);
    auto c = cover_to_json(cover);
    return Json{{"name", name},
                {"permutation", std::move(image)},
                {"matrix", format_matrix(matrix, &sigma)},
                {"cover", std::move(c)},
                {"part_count", cover.part_count()}};
  };
  Json cycle_list = Json::array();
  for (const auto& c : cycles) {
    cycle_list.push_back({{"vertices", vertices_json(c)}, {"edges", edge_labels(cycle_edge_mask(g, c), g.edge_count())}});
  }
  Json support_list = Json::array();
  for (ElementMask s : supports) support_list.push_back(edge_labels(s, g.edge_count()));
  Json accepted = Json::array();
  for (std::size_t e : probe.accepted_edges) accepted.push_back("e" + std::to_string(e + 1));

  Json bundle = {
      {"graph", {{"vertices", g.vertex_count()}, {"dimacs", to_dimacs(g)}, {"edges", std::move(edges)}}},
      {"matrix", format_matrix(matrix)},
      {"assignment_solution_count", solutions.size()},
      {"solutions", Json::array({solution_json("c", sigma_c, cover_c), solution_json("d", sigma_d, cover_d)})},
      {"hamiltonian_cycle_count", cycles.size()},
      {"hamiltonian_cycles", std::move(cycle_list)},
      {"support_solutions", std::move(support_list)},
      {"dead_edges", edge_labels(dead, g.edge_count())},
      {"min_cycle_cover", lemma.min_cover ? cover_to_json(*lemma.min_cover) : Json(nullptr)},
      {"lemma_hmc", lemma_json(lemma)},
      {"greedy_probe",
       {{"first_edge", "e4"},
        {"accepted", std::move(accepted)},
        {"cover", probe.cover ? cover_to_json(*probe.cover) : Json(nullptr)},
        {"optimum_parts", probe.optimum_parts ? Json(*probe.optimum_parts) : Json(nullptr)},
        {"reached_optimum", probe.reached_optimum}}},
  };
  return {0, dump(bundle)};
}

CommandResult cmd_mvdccp(const std::string& graph_text, Format format, const Caps& caps) {
  require_format(format, {Format::kJson, Format::kText}, "mvdccp");
  const auto g = parse_graph(graph_text);
  if (static_cast<std::size_t>(g.vertex_count()) > caps.cover_vertices) {
    throw CapacityError("graph has " + std::to_string(g.vertex_count()) + " vertices; the cap is " +
                        std::to_string(caps.cover_vertices));
  }
  std::size_t count = 0;
  for_each_assignment_solution(g, [&](const Permutation&) { ++count; });
  const auto lemma = lemma_hmc_check(g);
  CommandResult result{lemma.min_cover ? 0 : 1, {}};
  if (format == Format::kJson) {
    Json report = {{"vertices", g.vertex_count()},
                   {"edges", g.edge_count()},
                   {"assignment_solution_count", count},
                   {"feasible", lemma.min_cover.has_value()},
                   {"min_cycle_cover", lemma.min_cover ? cover_to_json(*lemma.min_cover) : Json(nullptr)},
                   {"lemma_hmc", lemma_json(lemma)}};
    result.output = dump(report);
  } else {
    std::ostringstream out;
    out << "assignment solutions: " << count << '\n';
    if (lemma.min_cover) {
      out << "min cycle cover: " << describe_cover(*lemma.min_cover) << " (" << parts_text(lemma.min_cover->part_count())
          << ")\n";
    } else {
      out << "min cycle cover: infeasible\n";
    }
    out << "lemma: hamiltonian=" << (lemma.hamiltonian ? "yes" : "no")
        << " single-part=" << (lemma.single_hamiltonian_part ? "yes" : "no")
        << " holds=" << (lemma.holds ? "yes" : "no") << '\n';
    result.output = out.str();
  }
  return result;
}

CommandResult cmd_classify(ProblemKind kind, std::size_t min_n, std::size_t max_n, std::uint64_t seed,
                           std::size_t instances, Format format, const Caps& caps) {
  if (max_n > caps.growth) {
    throw CapacityError("size " + std::to_string(max_n) + " exceeds HLAB_MAX_N");
  }
  const auto report = classify_growth(kind, min_n, max_n, seed, instances);
  switch (format) {
    case Format::kJson:
      return {0, dump(growth_to_json(report))};
    case Format::kCsv:
      return {0, growth_to_csv(report)};
    case Format::kText: {
      std::ostringstream out;
      out << to_string(kind) << " growth, seed " << seed << ", " << instances << " instances per size\n";
      out << growth_to_csv(report);
      out << "label: " << report.label << '\n';
      return {0, out.str()};
    }
  }
  return {2, {}};
}

namespace {

std::unique_ptr<IndependenceOracle> oracle_from_text(ProblemKind kind, const std::string& text) {
  switch (kind) {
    case ProblemKind::kMisp:
      return std::make_unique<MispOracle>(parse_graph(text));
    case ProblemKind::kHcp:
      return std::make_unique<HcpOracle>(parse_graph(text));
    case ProblemKind::kSat:
      return std::make_unique<SatOracle>(parse_cnf(text));
    case ProblemKind::kFamily:
      return std::make_unique<FamilyOracle>(parse_family(text));
  }
  throw ContractError("unknown problem");
}

}  // namespace

CommandResult cmd_trace(const TraceRequest& request, Format format) {
  require_format(format, {Format::kText, Format::kJson}, "trace");
  auto oracle = oracle_from_text(request.kind, request.input_text);
  Policy policy;
  if (request.policy == "first") {
    policy = Policy::first_feasible();
  } else if (request.policy == "random") {
    policy = Policy::random(request.seed);
  } else if (request.policy == "given") {
    std::vector<std::size_t> order;
    for (std::size_t e : request.order) {
      if (e == 0) throw ContractError("element numbers in --order are 1-based");
      order.push_back(e - 1);
    }
    policy = Policy::given_order(std::move(order));
  } else {
    throw ContractError("unknown policy '" + request.policy + "'");
  }
  const auto trace = sequential_build(*oracle, policy);
  if (format == Format::kText) return {0, format_trace(trace, *oracle)};
  Json queries = Json::array();
  for (const auto& q : trace.queries) {
    queries.push_back({{"element", oracle->element_label(q.element)},
                       {"partial_size", q.partial_size},
                       {"verdict", q.accepted ? "accept" : "reject"},
                       {"work", q.work},
                       {"cumulative", q.cumulative_work}});
  }
  Json report = {{"problem", to_string(trace.kind)},
                 {"start_work", trace.start_work},
                 {"queries", std::move(queries)},
                 {"result", oracle->format(trace.result)},
                 {"total_work", trace.total_work()},
                 {"theorem2_check", theorem2_check(trace)}};
  return {0, dump(report)};
}

CommandResult cmd_verdicts(const std::vector<VerdictInput>& inputs, Format format) {
  std::vector<VerdictInstance> instances;
  if (inputs.empty()) {
    instances.push_back({"figure1-misp", std::make_shared<MispOracle>(figure1_graph())});
    instances.push_back({"figure1-hcp", std::make_shared<HcpOracle>(figure1_graph())});
  }
  for (const auto& in : inputs) instances.push_back({in.name, oracle_from_text(in.kind, in.text)});
  const auto rows = uf_verdict_sheet(instances);
  switch (format) {
    case Format::kJson:
      return {0, dump(verdicts_to_json(rows))};
    case Format::kCsv:
    case Format::kText:
      return {0, verdicts_to_csv(rows)};
  }
  return {2, {}};
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string stem(const std::string& path) {
  auto name = path.substr(path.find_last_of('/') + 1);
  return name.substr(0, name.find('.'));
}

std::pair<std::size_t, std::size_t> parse_sizes(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ContractError("--sizes expects A..B");
  try {
    std::size_t used = 0;
    const auto lo = std::stoull(text.substr(0, dots), &used);
    if (used != dots) throw ContractError("--sizes expects A..B");
    const auto hi_text = text.substr(dots + 2);
    const auto hi = std::stoull(hi_text, &used);
    if (used != hi_text.size()) throw ContractError("--sizes expects A..B");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ContractError("--sizes expects A..B");
  }
}

ProblemKind parse_problem(const std::string& name) {
  if (name == "misp") return ProblemKind::kMisp;
  if (name == "hcp") return ProblemKind::kHcp;
  if (name == "sat") return ProblemKind::kSat;
  if (name == "family") return ProblemKind::kFamily;
  throw ContractError("unknown problem '" + name + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hereditary set system laboratory", "hlab"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  std::string format_name = "json";
  std::uint64_t seed = kDefaultSeed;
  std::string sizes;
  std::string problem = "misp";
  std::vector<std::int64_t> weights;
  std::size_t instances = 8;
  std::string policy = "first";
  std::vector<std::size_t> order;
  std::vector<std::string> misp_inputs;
  std::vector<std::string> hcp_inputs;
  std::vector<std::string> sat_inputs;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write the report to PATH instead of stdout");
    sub->add_option("--format", format_name, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* matroid = app.add_subcommand("matroid", "Check heredity and the exchange property of a family file");
  matroid->add_option("--input", input, "Family file")->required();
  add_common(matroid);

  auto* greedy_cmd = app.add_subcommand("greedy", "Compare greedy with the brute-force optimum");
  greedy_cmd->add_option("--input", input, "Family file")->required();
  greedy_cmd->add_option("--weights", weights, "Positive integer weight per element")->required()->delimiter(',');
  add_common(greedy_cmd);

  auto* figure1 = app.add_subcommand("figure1", "Reproduce the 8-vertex cycle-cover example");
  add_common(figure1);

  auto* mvdccp = app.add_subcommand("mvdccp", "Minimum vertex-disjoint cycle cover of a DIMACS graph");
  mvdccp->add_option("--input", input, "DIMACS edge file")->required();
  add_common(mvdccp);

  auto* classify = app.add_subcommand("classify", "Extension-cost growth of a problem family");
  classify->add_option("--problem", problem, "misp, hcp or sat")->check(CLI::IsMember({"misp", "hcp", "sat"}));
  classify->add_option("--sizes", sizes, "Size range A..B")->required();
  classify->add_option("--seed", seed, "Generator seed");
  classify->add_option("--instances", instances, "Instances per size");
  add_common(classify);

  auto* trace = app.add_subcommand("trace", "Sequential construction trace");
  trace->add_option("--problem", problem, "misp, hcp, sat or family")
      ->check(CLI::IsMember({"misp", "hcp", "sat", "family"}));
  trace->add_option("--input", input, "Instance file")->required();
  trace->add_option("--policy", policy, "first, random or given")->check(CLI::IsMember({"first", "random", "given"}));
  trace->add_option("--order", order, "1-based element order for --policy given")->delimiter(',');
  trace->add_option("--seed", seed, "Seed for --policy random");
  add_common(trace);

  auto* verdicts = app.add_subcommand("verdicts", "Observed costs next to claimed classifications");
  verdicts->add_option("--misp", misp_inputs, "DIMACS graph read as an independent-set instance");
  verdicts->add_option("--hcp", hcp_inputs, "DIMACS graph read as a Hamiltonian-cycle instance");
  verdicts->add_option("--sat", sat_inputs, "DIMACS CNF file");
  add_common(verdicts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    const auto caps = Caps::from_environment();
    const Format format = format_name == "csv" ? Format::kCsv : format_name == "text" ? Format::kText : Format::kJson;
    CommandResult result;
    if (*matroid) {
      result = cmd_matroid(read_file(input), stem(input), format, caps);
    } else if (*greedy_cmd) {
      result = cmd_greedy(read_file(input), stem(input), weights, format, caps);
    } else if (*figure1) {
      result = cmd_figure1(format);
    } else if (*mvdccp) {
      result = cmd_mvdccp(read_file(input), format, caps);
    } else if (*classify) {
      const auto [lo, hi] = parse_sizes(sizes);
      result = cmd_classify(parse_problem(problem), lo, hi, seed, instances, format, caps);
    } else if (*trace) {
      result = cmd_trace({parse_problem(problem), read_file(input), policy, order, seed}, format);
    } else if (*verdicts) {
      std::vector<VerdictInput> inputs;
      for (const auto& p : misp_inputs) inputs.push_back({ProblemKind::kMisp, stem(p) + "-misp", read_file(p)});
      for (const auto& p : hcp_inputs) inputs.push_back({ProblemKind::kHcp, stem(p) + "-hcp", read_file(p)});
      for (const auto& p : sat_inputs) inputs.push_back({ProblemKind::kSat, stem(p) + "-sat", read_file(p)});
      result = cmd_verdicts(inputs, format);
    }
    if (out_path.empty()) {
      out << result.output;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot write " + out_path);
      file << result.output;
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    err << "hlab: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace hlab::cli
