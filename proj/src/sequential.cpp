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

#include "hlab/sequential.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "hlab/errors.hpp"
#include "hlab/random.hpp"

namespace hlab {

namespace {

ElementMask element_bit(std::size_t i) { return ElementMask{1} << i; }

std::vector<std::size_t> query_order(const Policy& policy, std::size_t m) {
  std::vector<std::size_t> order;
  switch (policy.kind) {
    case Policy::Kind::kFirstFeasible:
      order.resize(m);
      std::iota(order.begin(), order.end(), std::size_t{0});
      break;
    case Policy::Kind::kRandom: {
      order.resize(m);
      std::iota(order.begin(), order.end(), std::size_t{0});
      Rng rng(policy.seed);
      rng.shuffle(std::span<std::size_t>(order));
      break;
    }
    case Policy::Kind::kGivenOrder: {
      std::vector<bool> listed(m, false);
      for (std::size_t e : policy.order) {
        if (e >= m) throw ContractError("policy order names element " + std::to_string(e) + " out of range");
        if (listed[e]) throw ContractError("policy order repeats element " + std::to_string(e));
        listed[e] = true;
        order.push_back(e);
      }
      for (std::size_t e = 0; e < m; ++e) {
        if (!listed[e]) order.push_back(e);
      }
      break;
    }
  }
  return order;
}

std::optional<double> fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() < 2) return std::nullopt;
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

std::string fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

std::size_t generator_minimum(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kMisp:
      return 1;
    case ProblemKind::kHcp:
    case ProblemKind::kSat:
      return 3;
    case ProblemKind::kFamily:
      break;
  }
  throw ContractError("no random generator for explicit families");
}

std::string claimed_class(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kMisp:
      return "in UF: polynomial extension predicate (claimed)";
    case ProblemKind::kHcp:
      return "not in UF: inherently exponential (claimed)";
    case ProblemKind::kSat:
    case ProblemKind::kFamily:
      break;
  }
  return "no claim";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

SequentialTrace sequential_build(IndependenceOracle& oracle, const Policy& policy) {
  SequentialTrace trace;
  trace.kind = oracle.kind();
  const auto start = oracle.member(0);
  if (!start.member) throw ContractError("Q is empty: the empty set is not admissible");
  trace.start_work = 1 + start.work;

  std::uint64_t time = trace.start_work;
  ElementMask partial = 0;
  for (std::size_t e : query_order(policy, oracle.element_count())) {
    const auto verdict = oracle.extend(partial, e);
    time += 1 + verdict.work;
    trace.queries.push_back({e, static_cast<std::size_t>(std::popcount(partial)), verdict.member,
                             verdict.work, time});
    if (verdict.member) {
      partial |= element_bit(e);
      trace.steps.push_back({e, time, partial});
    }
  }
  trace.result = partial;
  trace.support = true;
  return trace;
}

bool theorem2_check(const SequentialTrace& trace) {
  std::uint64_t previous = trace.start_work;
  for (const auto& step : trace.steps) {
    if (step.cumulative_work <= previous) return false;
    previous = step.cumulative_work;
  }
  return previous <= trace.total_work();
}

std::string format_trace(const SequentialTrace& trace, const IndependenceOracle& oracle) {
  std::ostringstream out;
  out << "# step element verdict work cumulative\n";
  out << "0 - start " << trace.start_work - 1 << ' ' << trace.start_work << '\n';
  for (std::size_t i = 0; i < trace.queries.size(); ++i) {
    const auto& q = trace.queries[i];
    out << i + 1 << ' ' << oracle.element_label(q.element) << ' ' << (q.accepted ? "accept" : "reject") << ' '
        << q.work << ' ' << q.cumulative_work << '\n';
  }
  out << "# result " << oracle.format(trace.result) << '\n';
  return out.str();
}

std::size_t growth_size_cap(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kMisp:
      return 64;
    case ProblemKind::kHcp:
      return 12;
    case ProblemKind::kSat:
      return 24;
    case ProblemKind::kFamily:
      break;
  }
  return 0;
}

std::unique_ptr<IndependenceOracle> make_growth_instance(ProblemKind kind, std::size_t n, std::uint64_t seed) {
  if (n < generator_minimum(kind)) {
    throw ContractError("size " + std::to_string(n) + " is below the generator minimum");
  }
  if (n > growth_size_cap(kind)) {
    throw CapacityError("size " + std::to_string(n) + " exceeds the " + std::string(to_string(kind)) +
                        " cap of " + std::to_string(growth_size_cap(kind)));
  }
  const int vertices = static_cast<int>(n);
  switch (kind) {
    case ProblemKind::kMisp:
      return std::make_unique<MispOracle>(random_graph(vertices, 3, 10, seed));
    case ProblemKind::kHcp: {
      const std::size_t chords = std::min(n / 2, n * (n - 1) / 2 - n);
      return std::make_unique<HcpOracle>(random_hamiltonian_graph(vertices, chords, seed));
    }
    case ProblemKind::kSat:
      return std::make_unique<SatOracle>(random_planted_3cnf(vertices, 4 * n, seed));
    case ProblemKind::kFamily:
      break;
  }
  throw ContractError("no random generator for explicit families");
}

GrowthReport classify_growth(ProblemKind kind, std::size_t min_n, std::size_t max_n, std::uint64_t seed,
                             std::size_t instances_per_size) {
  if (min_n > max_n) throw ContractError("empty size range");
  if (instances_per_size == 0) throw ContractError("need at least one instance per size");
  if (max_n > growth_size_cap(kind)) {
    throw CapacityError("size " + std::to_string(max_n) + " exceeds the " + std::string(to_string(kind)) +
                        " cap of " + std::to_string(growth_size_cap(kind)));
  }
  GrowthReport report;
  report.kind = kind;
  report.seed = seed;
  report.instances_per_size = instances_per_size;
  report.bound_constant = kGrowthBoundConstant;

  for (std::size_t n = min_n; n <= max_n; ++n) {
    GrowthRow row;
    row.n = n;
    double total = 0.0;
    for (std::size_t i = 0; i < instances_per_size; ++i) {
      const auto instance_seed = mix_seed(seed, n, i);
      auto oracle = make_growth_instance(kind, n, instance_seed);
      const auto trace = sequential_build(*oracle, Policy::random(mix_seed(instance_seed, 1)));
      ++row.instances;
      for (const auto& q : trace.queries) {
        ++row.queries;
        total += static_cast<double>(q.work);
        row.worst_work = std::max(row.worst_work, q.work);
        row.worst_work_per_partial =
            std::max(row.worst_work_per_partial,
                     static_cast<double>(q.work) / static_cast<double>(std::max<std::size_t>(1, q.partial_size)));
      }
    }
    row.mean_work = row.queries ? total / static_cast<double>(row.queries) : 0.0;
    report.rows.push_back(row);
  }

  std::vector<double> log_n;
  std::vector<double> lin_n;
  std::vector<double> log_w;
  for (const auto& row : report.rows) {
    log_n.push_back(std::log(static_cast<double>(row.n)));
    lin_n.push_back(static_cast<double>(row.n));
    log_w.push_back(std::log1p(static_cast<double>(row.worst_work)));
  }
  report.loglog_slope = fit_slope(log_n, log_w);
  report.semilog_slope = fit_slope(lin_n, log_w);

  if (kind == ProblemKind::kMisp) {
    const bool bounded = std::all_of(report.rows.begin(), report.rows.end(), [&](const GrowthRow& r) {
      return r.worst_work <= report.bound_constant * r.n * r.n;
    });
    report.label = bounded ? "poly-bounded observed" : "bound exceeded";
  } else {
    report.label = "raw growth (no law asserted)";
  }
  return report;
}

nlohmann::ordered_json growth_to_json(const GrowthReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"instances", r.instances},
                    {"queries", r.queries},
                    {"worst_work", r.worst_work},
                    {"mean_work", r.mean_work},
                    {"worst_work_per_partial", r.worst_work_per_partial}});
  }
  return {{"problem", to_string(report.kind)},
          {"seed", report.seed},
          {"instances_per_size", report.instances_per_size},
          {"work_unit", report.kind == ProblemKind::kMisp ? "adjacency probes" : "search nodes"},
          {"rows", std::move(rows)},
          {"loglog_slope", optional_number(report.loglog_slope)},
          {"semilog_slope", optional_number(report.semilog_slope)},
          {"bound_constant", report.bound_constant},
          {"label", report.label}};
}

std::string growth_to_csv(const GrowthReport& report) {
  std::ostringstream out;
  out << "problem,n,instances,queries,worst_work,mean_work,worst_work_per_partial,label\n";
  for (const auto& r : report.rows) {
    out << to_string(report.kind) << ',' << r.n << ',' << r.instances << ',' << r.queries << ',' << r.worst_work
        << ',' << fixed(r.mean_work) << ',' << fixed(r.worst_work_per_partial) << ',' << csv_field(report.label)
        << '\n';
  }
  return out.str();
}

std::vector<VerdictRow> uf_verdict_sheet(std::span<const VerdictInstance> instances) {
  std::vector<VerdictRow> rows;
  for (const auto& instance : instances) {
    auto& oracle = *instance.oracle;
    VerdictRow row;
    row.name = instance.name;
    row.kind = oracle.kind();
    row.n = oracle.instance_size();
    row.elements = oracle.element_count();
    row.claimed = claimed_class(row.kind);
    if (!oracle.member(0).member) {
      row.observed = "Q is empty: no admissible start";
      rows.push_back(std::move(row));
      continue;
    }
    const auto trace = sequential_build(oracle, Policy::first_feasible());
    row.admissible_start = true;
    row.support = oracle.format(trace.result);
    row.support_size = trace.steps.size();
    row.construction_time = trace.total_work();
    row.queries = trace.queries.size();
    for (const auto& q : trace.queries) {
      row.elementary_work += q.work;
      row.max_query_work = std::max(row.max_query_work, q.work);
    }
    if (!trace.queries.empty()) row.first_query_work = trace.queries.front().work;

    std::ostringstream observed;
    switch (row.kind) {
      case ProblemKind::kMisp: {
        const auto bound = row.n * (row.n + 1) / 2;
        observed << "support built with " << row.elementary_work << " adjacency probes; n(n+1)/2 = " << bound
                 << (row.elementary_work <= bound ? "; within bound" : "; bound exceeded");
        break;
      }
      case ProblemKind::kHcp:
      case ProblemKind::kSat:
        observed << "first extension query explored " << row.first_query_work
                 << " search nodes; worst query " << row.max_query_work << " nodes";
        break;
      case ProblemKind::kFamily:
        observed << "explicit family: one lookup per query";
        break;
    }
    row.observed = observed.str();
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json verdicts_to_json(std::span<const VerdictRow> rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    out.push_back({{"name", r.name},
                   {"problem", to_string(r.kind)},
                   {"n", r.n},
                   {"elements", r.elements},
                   {"admissible_start", r.admissible_start},
                   {"support", r.support},
                   {"support_size", r.support_size},
                   {"construction_time", r.construction_time},
                   {"elementary_work", r.elementary_work},
                   {"queries", r.queries},
                   {"first_query_work", r.first_query_work},
                   {"max_query_work", r.max_query_work},
                   {"observed", r.observed},
                   {"claimed", r.claimed}});
  }
  return {{"verdicts", std::move(out)}};
}

std::string verdicts_to_csv(std::span<const VerdictRow> rows) {
  std::ostringstream out;
  out << "name,problem,n,elements,admissible_start,support,support_size,construction_time,elementary_work,"
         "queries,first_query_work,max_query_work,observed,claimed\n";
  for (const auto& r : rows) {
    out << csv_field(r.name) << ',' << to_string(r.kind) << ',' << r.n << ',' << r.elements << ','
        << (r.admissible_start ? "true" : "false") << ',' << csv_field(r.support) << ',' << r.support_size << ','
        << r.construction_time << ',' << r.elementary_work << ',' << r.queries << ',' << r.first_query_work << ','
        << r.max_query_work << ',' << csv_field(r.observed) << ',' << csv_field(r.claimed) << '\n';
  }
  return out.str();
}

}  // namespace hlab
