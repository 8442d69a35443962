#include "cyberdef/ood/dataset.hpp"

namespace cyberdef::ood {

StateLabel StateDictionary::intern(std::uint64_t packed) {
  auto it = label_by_packed_.find(packed);
  if (it != label_by_packed_.end()) return it->second;
  const StateLabel label = static_cast<StateLabel>(packed_by_label_.size());
  label_by_packed_.emplace(packed, label);
  packed_by_label_.push_back(packed);
  return label;
}

bool StateDictionary::lookup(std::uint64_t packed, StateLabel& out) const {
  auto it = label_by_packed_.find(packed);
  if (it == label_by_packed_.end()) return false;
  out = it->second;
  return true;
}

}  // namespace cyberdef::ood
