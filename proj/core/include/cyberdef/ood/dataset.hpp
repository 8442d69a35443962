#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace cyberdef::ood {

/// Dense label for one distinct packed observation. Labels are assigned in
/// first-seen order while a dataset is built, so two identical collection
/// runs produce identical dictionaries.
using StateLabel = std::uint32_t;

/// Bijective packed-observation <-> label table.
class StateDictionary {
 public:
  /// Returns the existing label or assigns the next one.
  StateLabel intern(std::uint64_t packed);

  /// Label lookup without insertion; returns false if the state is unknown.
  bool lookup(std::uint64_t packed, StateLabel& out) const;

  std::uint64_t packed_of(StateLabel label) const { return packed_by_label_.at(label); }
  std::size_t size() const { return packed_by_label_.size(); }

  const std::vector<std::uint64_t>& all_packed() const { return packed_by_label_; }

  bool operator==(const StateDictionary& other) const {
    return packed_by_label_ == other.packed_by_label_;
  }

 private:
  std::unordered_map<std::uint64_t, StateLabel> label_by_packed_;
  std::vector<std::uint64_t> packed_by_label_;
};

/// One observed transition (s_prev, action) -> s_next.
struct TransitionRecord {
  std::uint32_t episode = 0;
  std::uint32_t t = 0;  // >= 1; index of the state the transition enters
  StateLabel s_prev = 0;
  std::uint16_t action = 0;  // blue action index
  StateLabel s_next = 0;

  bool operator==(const TransitionRecord&) const = default;
};

/// Training data for one (policy, red strategy) pairing. Rectangular by
/// construction: episodes * horizon records, sorted by (episode, t).
struct TransitionDataset {
  std::string policy_tag;
  std::uint32_t episodes = 0;
  std::uint32_t horizon = 0;
  StateDictionary dictionary;
  std::vector<TransitionRecord> records;

  std::size_t size() const { return records.size(); }
};

}  // namespace cyberdef::ood
