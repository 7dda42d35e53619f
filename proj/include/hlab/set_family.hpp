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

#ifndef HLAB_SET_FAMILY_HPP_
#define HLAB_SET_FAMILY_HPP_

// Explicit hereditary set systems (R, Q) over a small ground set R, with
// subsets encoded as bit masks over element indices.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hlab {

using Mask = std::uint32_t;

inline constexpr std::size_t kMaxGroundSize = 24;

inline int cardinality(Mask m) { return std::popcount(m); }

inline bool is_subset(Mask sub, Mask super) { return (sub & ~super) == 0; }

class GroundSet {
 public:
  // Labels default to a, b, c, ...
  explicit GroundSet(std::size_t size);
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  Mask full_mask() const {
    return size() == 0 ? 0u : static_cast<Mask>((std::uint64_t{1} << size()) - 1);
  }
  bool valid(Mask m) const { return is_subset(m, full_mask()); }

  // "{a,c}" style rendering.
  std::string format(Mask m) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

// A non-empty family of subsets of a ground set. Members are kept sorted by
// mask value and deduplicated. Heredity is a property to check, not an
// invariant of this type; use downward_closure() to build hereditary ones.
class SetFamily {
 public:
  SetFamily(GroundSet ground, std::vector<Mask> members);

  const GroundSet& ground() const { return ground_; }
  std::span<const Mask> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Mask m) const {
    return ground_.valid(m) && index_[static_cast<std::size_t>(m)];
  }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_;
  }

 private:
  GroundSet ground_;
  std::vector<Mask> members_;
  std::vector<bool> index_;
};

class WeightFunction {
 public:
  // Every weight must be >= 1.
  explicit WeightFunction(std::vector<std::int64_t> weights);

  std::size_t size() const { return weights_.size(); }
  std::int64_t operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<std::int64_t>& values() const { return weights_; }

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  std::vector<std::int64_t> weights_;
};

struct HeredityWitness {
  Mask member;
  Mask missing_subset;
};

// pi1 and pi2 are members with |pi2| = |pi1| + 1 and no r in pi2 \ pi1
// such that pi1 + r is a member.
struct ExchangeViolation {
  Mask smaller;
  Mask larger;

  friend bool operator==(const ExchangeViolation&, const ExchangeViolation&) = default;
};

struct GreedyResult {
  Mask selection = 0;
  // Snapshots starting at the empty set, one element added per entry.
  std::vector<Mask> trace;
};

struct WeightedSet {
  Mask set = 0;
  std::int64_t weight = 0;
};

std::optional<HeredityWitness> find_heredity_violation(const SetFamily& family);
inline bool is_hereditary(const SetFamily& family) {
  return !find_heredity_violation(family).has_value();
}

// All subsets of the given sets. An empty list yields {{}}.
SetFamily downward_closure(const GroundSet& ground, std::span<const Mask> maximal_sets);

// Inclusion-maximal members, ascending by mask.
std::vector<Mask> maximal_members(const SetFamily& family);

// Throws ContractError when the family is not hereditary.
std::optional<ExchangeViolation> find_exchange_violation(const SetFamily& family);
inline bool has_exchange_property(const SetFamily& family) {
  return !find_exchange_violation(family).has_value();
}

bool is_matroid(const SetFamily& family);

std::int64_t weight_of(Mask subset, const WeightFunction& w);

// Heaviest-first greedy; ties go to the lower element index.
GreedyResult greedy(const SetFamily& family, const WeightFunction& w);

// Maximum-weight member; ties go to the smaller mask.
WeightedSet brute_force_max(const SetFamily& family, const WeightFunction& w);

// Weights on which greedy is strictly suboptimal, built from an exchange
// violation: (k+2)M on pi1, (k+1)M on pi2 \ pi1 and 1 elsewhere, where
// k = |pi1| and M = 1 + |R \ (pi1 u pi2)| outweighs every light element.
WeightFunction theorem1_witness(const SetFamily& family, const ExchangeViolation& violation);

inline constexpr std::size_t kMaxEnumerationGround = 4;

// Visits every non-empty downward-closed family over n <= 4 elements exactly
// once, in ascending order of the family's characteristic bit string.
void for_each_hereditary_family(std::size_t n,
                                const std::function<void(const SetFamily&)>& visit);
std::vector<SetFamily> enumerate_hereditary_families(std::size_t n);

}  // namespace hlab

#endif  // HLAB_SET_FAMILY_HPP_
