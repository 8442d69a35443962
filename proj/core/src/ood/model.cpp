#include "cyberdef/ood/model.hpp"

#include "cyberdef/common/errors.hpp"

namespace cyberdef::ood {

TransitionModel::TransitionModel(std::string policy_tag, StateDictionary dictionary,
                                 std::map<std::uint64_t, Context> contexts)
    : policy_tag_(std::move(policy_tag)),
      dictionary_(std::move(dictionary)),
      contexts_(std::move(contexts)) {}

TransitionModel TransitionModel::fit(const TransitionDataset& dataset) {
  if (dataset.records.empty()) {
    throw DomainError("cannot fit a transition model on an empty dataset");
  }
  std::map<std::uint64_t, Context> contexts;
  for (const TransitionRecord& r : dataset.records) {
    Context& ctx = contexts[context_key(r.s_prev, r.action)];
    ++ctx.outcomes[r.s_next];
    ++ctx.total;
  }
  return TransitionModel(dataset.policy_tag, dataset.dictionary, std::move(contexts));
}

std::vector<Prediction> TransitionModel::predict(StateLabel s_prev,
                                                 std::uint16_t action) const {
  std::vector<Prediction> out;
  auto it = contexts_.find(context_key(s_prev, action));
  if (it == contexts_.end()) return out;
  out.reserve(it->second.outcomes.size());
  for (const auto& [label, count] : it->second.outcomes) {
    out.push_back({label, count, static_cast<double>(count) /
                                     static_cast<double>(it->second.total)});
  }
  return out;
}

std::vector<Prediction> TransitionModel::predict_packed(std::uint64_t s_prev_packed,
                                                        std::uint16_t action) const {
  StateLabel label;
  if (!dictionary_.lookup(s_prev_packed, label)) return {};
  return predict(label, action);
}

Verdict TransitionModel::classify(StateLabel s_prev, std::uint16_t action,
                                  StateLabel s_next, const MonitorConfig& config) const {
  auto it = contexts_.find(context_key(s_prev, action));
  if (it == contexts_.end()) return Verdict::OutOfDistribution;
  auto out = it->second.outcomes.find(s_next);
  if (out == it->second.outcomes.end()) return Verdict::OutOfDistribution;
  // Strictly greater than rho counts as in-distribution; equality does not.
  const double threshold_count = config.rho * static_cast<double>(it->second.total);
  return static_cast<double>(out->second) > threshold_count
             ? Verdict::InDistribution
             : Verdict::OutOfDistribution;
}

Verdict TransitionModel::classify_packed(std::uint64_t s_prev, std::uint16_t action,
                                         std::uint64_t s_next, const MonitorConfig& config,
                                         const std::string& declared_policy) const {
  if (declared_policy != policy_tag_) {
    throw ModelMismatchError("model trained for policy '" + policy_tag_ +
                             "' queried under policy '" + declared_policy + "'");
  }
  StateLabel prev, next;
  if (!dictionary_.lookup(s_prev, prev)) return Verdict::OutOfDistribution;
  if (!dictionary_.lookup(s_next, next)) return Verdict::OutOfDistribution;
  return classify(prev, action, next, config);
}

bool TransitionModel::episode_is_ood(const std::vector<TransitionRecord>& trace,
                                     const MonitorConfig& config) const {
  for (const TransitionRecord& r : trace) {
    if (classify(r.s_prev, r.action, r.s_next, config) == Verdict::OutOfDistribution) {
      return true;
    }
  }
  return false;
}

}  // namespace cyberdef::ood
