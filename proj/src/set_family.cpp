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

#include "hlab/set_family.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hlab/errors.hpp"

namespace hlab {

namespace {

std::vector<std::string> default_labels(std::size_t size) {
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    labels.emplace_back(1, static_cast<char>('a' + i));
  }
  return labels;
}

Mask bit(std::size_t i) { return Mask{1} << i; }

void require_hereditary(const SetFamily& family, const char* op) {
  if (!is_hereditary(family)) {
    throw ContractError(std::string(op) + " requires a hereditary family");
  }
}

}  // namespace

GroundSet::GroundSet(std::size_t size) {
  if (size > kMaxGroundSize) {
    throw CapacityError("ground set of " + std::to_string(size) +
                        " elements exceeds the limit of " + std::to_string(kMaxGroundSize));
  }
  labels_ = default_labels(size);
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxGroundSize) {
    throw CapacityError("ground set of " + std::to_string(labels_.size()) +
                        " elements exceeds the limit of " + std::to_string(kMaxGroundSize));
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw ContractError("ground set labels must be unique");
}

std::string GroundSet::format(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (m & bit(i)) {
      if (!first) out += ',';
      out += labels_[i];
      first = false;
    }
  }
  return out + "}";
}

SetFamily::SetFamily(GroundSet ground, std::vector<Mask> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  if (members_.empty()) throw ContractError("a set family must have at least one member");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  index_.assign(std::size_t{1} << ground_.size(), false);
  for (Mask m : members_) {
    if (!ground_.valid(m)) throw ContractError("member uses elements outside the ground set");
    index_[m] = true;
  }
}

WeightFunction::WeightFunction(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
  for (std::int64_t w : weights_) {
    if (w < 1) throw ContractError("weights must be positive integers");
  }
}

std::optional<HeredityWitness> find_heredity_violation(const SetFamily& family) {
  // Checking one-smaller subsets suffices: by induction they reach every subset.
  const auto n = family.ground().size();
  for (Mask member : family.members()) {
    for (std::size_t i = n; i-- > 0;) {
      if ((member & bit(i)) && !family.contains(member & ~bit(i))) {
        return HeredityWitness{member, member & ~bit(i)};
      }
    }
  }
  return std::nullopt;
}

SetFamily downward_closure(const GroundSet& ground, std::span<const Mask> maximal_sets) {
  std::vector<bool> marked(std::size_t{1} << ground.size(), false);
  std::vector<Mask> members;
  marked[0] = true;
  members.push_back(0);
  for (Mask top : maximal_sets) {
    if (!ground.valid(top)) throw ContractError("set uses elements outside the ground set");
    if (marked[top]) continue;
    // Submask walk; an already marked submask already has its closure.
    for (Mask sub = top;; sub = (sub - 1) & top) {
      if (!marked[sub]) {
        marked[sub] = true;
        members.push_back(sub);
      }
      if (sub == 0) break;
    }
  }
  return SetFamily(ground, std::move(members));
}

std::vector<Mask> maximal_members(const SetFamily& family) {
  std::vector<Mask> out;
  const auto n = family.ground().size();
  for (Mask m : family.members()) {
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i) {
      if (!(m & bit(i)) && family.contains(m | bit(i))) maximal = false;
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

std::optional<ExchangeViolation> find_exchange_violation(const SetFamily& family) {
  require_hereditary(family, "exchange check");
  const auto n = family.ground().size();
  std::vector<std::vector<Mask>> by_size(n + 1);
  for (Mask m : family.members()) by_size[static_cast<std::size_t>(cardinality(m))].push_back(m);

  for (Mask smaller : family.members()) {
    const auto k = static_cast<std::size_t>(cardinality(smaller));
    if (k + 1 > n) continue;
    for (Mask larger : by_size[k + 1]) {
      const Mask donors = larger & ~smaller;
      bool extended = false;
      for (std::size_t i = 0; i < n && !extended; ++i) {
        if ((donors & bit(i)) && family.contains(smaller | bit(i))) extended = true;
      }
      if (!extended) return ExchangeViolation{smaller, larger};
    }
  }
  return std::nullopt;
}

bool is_matroid(const SetFamily& family) {
  return is_hereditary(family) && has_exchange_property(family);
}

std::int64_t weight_of(Mask subset, const WeightFunction& w) {
  if (w.size() < 32 && (subset >> w.size()) != 0) {
    throw ContractError("subset uses elements without a weight");
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (subset & bit(i)) total += w[i];
  }
  return total;
}

GreedyResult greedy(const SetFamily& family, const WeightFunction& w) {
  require_hereditary(family, "greedy");
  const auto n = family.ground().size();
  if (w.size() != n) throw ContractError("weight count does not match ground set size");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });

  GreedyResult result;
  result.trace.push_back(0);
  // One pass suffices: a rejected element stays rejected by heredity.
  for (std::size_t i : order) {
    const Mask next = result.selection | bit(i);
    if (family.contains(next)) {
      result.selection = next;
      result.trace.push_back(next);
    }
  }
  return result;
}

WeightedSet brute_force_max(const SetFamily& family, const WeightFunction& w) {
  if (w.size() != family.ground().size()) {
    throw ContractError("weight count does not match ground set size");
  }
  WeightedSet best{family.members().front(), weight_of(family.members().front(), w)};
  for (Mask m : family.members()) {
    const auto value = weight_of(m, w);
    if (value > best.weight) best = {m, value};
  }
  return best;
}

WeightFunction theorem1_witness(const SetFamily& family, const ExchangeViolation& violation) {
  const auto& ground = family.ground();
  const Mask pi1 = violation.smaller;
  const Mask pi2 = violation.larger;
  if (!family.contains(pi1) || !family.contains(pi2) ||
      cardinality(pi2) != cardinality(pi1) + 1) {
    throw ContractError("not an exchange violation of this family");
  }
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if ((pi2 & ~pi1 & bit(i)) && family.contains(pi1 | bit(i))) {
      throw ContractError("not an exchange violation: " + ground.label(i) + " extends " +
                          ground.format(pi1));
    }
  }

  const std::int64_t k = cardinality(pi1);
  const std::int64_t scale = 1 + cardinality(ground.full_mask() & ~(pi1 | pi2));
  std::vector<std::int64_t> weights(ground.size(), 1);
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (pi1 & bit(i)) {
      weights[i] = (k + 2) * scale;
    } else if (pi2 & bit(i)) {
      weights[i] = (k + 1) * scale;
    }
  }
  return WeightFunction(std::move(weights));
}

void for_each_hereditary_family(std::size_t n,
                                const std::function<void(const SetFamily&)>& visit) {
  if (n > kMaxEnumerationGround) {
    throw CapacityError("family enumeration supports at most " +
                        std::to_string(kMaxEnumerationGround) + " elements");
  }
  const std::size_t subsets = std::size_t{1} << n;
  const std::uint64_t codes = std::uint64_t{1} << subsets;
  const GroundSet ground(n);
  // code bit s set <=> subset s is a member; the empty set must be a member.
  for (std::uint64_t code = 1; code < codes; code += 2) {
    bool closed = true;
    for (std::size_t s = 1; s < subsets && closed; ++s) {
      if (!((code >> s) & 1)) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if ((s >> i & 1) && !((code >> (s & ~(std::size_t{1} << i))) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<Mask> members;
    for (std::size_t s = 0; s < subsets; ++s) {
      if ((code >> s) & 1) members.push_back(static_cast<Mask>(s));
    }
    visit(SetFamily(ground, std::move(members)));
  }
}

std::vector<SetFamily> enumerate_hereditary_families(std::size_t n) {
  std::vector<SetFamily> out;
  for_each_hereditary_family(n, [&](const SetFamily& f) { out.push_back(f); });
  return out;
}

}  // namespace hlab
