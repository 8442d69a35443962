#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyberdef/ood/dataset.hpp"

namespace cyberdef::ood {

struct Prediction {
  StateLabel s_next;
  std::uint32_t count;      // occurrences of this outcome in training
  double probability;       // count / context_total
};

struct MonitorConfig {
  double rho = 0.0;  // transition probability threshold, in [0, 1]
};

enum class Verdict : std::uint8_t { InDistribution, OutOfDistribution };

/// Empirical transition model over labeled discrete states, equivalent to a
/// pattern/summation network whose pattern units match training exemplars
/// exactly: with discrete inputs, kernel similarity degenerates to equality,
/// so activating the pattern entries that match (s_prev, action) and summing
/// per distinct next state is the same as keeping per-context outcome counts.
/// Immutable once fitted; safe to query concurrently.
class TransitionModel {
 public:
  struct Context {
    std::map<StateLabel, std::uint32_t> outcomes;  // s_next -> count
    std::uint64_t total = 0;                       // sum of counts
  };

  /// Aggregates a dataset. Throws DomainError on an empty dataset.
  static TransitionModel fit(const TransitionDataset& dataset);

  /// All outcomes observed for (s_prev, action), probabilities summing to 1.
  /// An unseen context yields an empty set; that is a defined result, not an
  /// error.
  std::vector<Prediction> predict(StateLabel s_prev, std::uint16_t action) const;
  std::vector<Prediction> predict_packed(std::uint64_t s_prev_packed,
                                         std::uint16_t action) const;

  /// In-distribution iff the transition was observed and its conditional
  /// probability strictly exceeds rho. At rho = 0 this reduces to pure
  /// membership: out-of-distribution means never seen in training.
  Verdict classify(StateLabel s_prev, std::uint16_t action, StateLabel s_next,
                   const MonitorConfig& config) const;

  /// Same check keyed by raw packed observations; packings absent from the
  /// dictionary are out-of-distribution by definition. `declared_policy` must
  /// match the model's tag ("policy guard"); throws ModelMismatchError
  /// otherwise.
  Verdict classify_packed(std::uint64_t s_prev, std::uint16_t action, std::uint64_t s_next,
                          const MonitorConfig& config,
                          const std::string& declared_policy) const;

  /// True iff at least one transition of the trace is out-of-distribution.
  bool episode_is_ood(const std::vector<TransitionRecord>& trace,
                      const MonitorConfig& config) const;

  const std::string& policy_tag() const { return policy_tag_; }
  /// Number of distinct observed states (output layer width).
  std::size_t state_count() const { return dictionary_.size(); }
  std::size_t context_count() const { return contexts_.size(); }
  const StateDictionary& dictionary() const { return dictionary_; }
  const std::map<std::uint64_t, Context>& contexts() const { return contexts_; }

  static std::uint64_t context_key(StateLabel s_prev, std::uint16_t action) {
    return (static_cast<std::uint64_t>(s_prev) << 16) | action;
  }

  // Used by the model file loader; not part of the query surface.
  TransitionModel(std::string policy_tag, StateDictionary dictionary,
                  std::map<std::uint64_t, Context> contexts);
  TransitionModel() = default;

 private:
  std::string policy_tag_;
  StateDictionary dictionary_;
  std::map<std::uint64_t, Context> contexts_;
};

}  // namespace cyberdef::ood
