#include "cyberdef/netsim/actions.hpp"

#include "cyberdef/common/errors.hpp"

namespace cyberdef::sim {

int BlueAction::index() const {
  switch (kind) {
    case BlueActionKind::Sleep: return 0;
    case BlueActionKind::Monitor: return 1;
    case BlueActionKind::Analyze: return 2 + 10 * host;
    case BlueActionKind::Remove: return 2 + 10 * host + 1;
    case BlueActionKind::Restore: return 2 + 10 * host + 2;
    case BlueActionKind::DeployDecoy: return 2 + 10 * host + 2 + decoy;
  }
  throw DomainError("unreachable blue action kind");
}

BlueAction BlueAction::from_index(int index) {
  if (!valid_index(index)) {
    throw DomainError("blue action index out of range: " + std::to_string(index));
  }
  if (index == 0) return sleep();
  if (index == 1) return monitor();
  const int rel = index - 2;
  const HostId h = rel / 10;
  const int slot = rel % 10;
  if (slot == 0) return analyze(h);
  if (slot == 1) return remove(h);
  if (slot == 2) return restore(h);
  return deploy_decoy(h, slot - 2);
}

std::string BlueAction::to_string() const {
  switch (kind) {
    case BlueActionKind::Sleep: return "Sleep";
    case BlueActionKind::Monitor: return "Monitor";
    case BlueActionKind::Analyze: return "Analyze(" + std::string(host_name(host)) + ")";
    case BlueActionKind::Remove: return "Remove(" + std::string(host_name(host)) + ")";
    case BlueActionKind::Restore: return "Restore(" + std::string(host_name(host)) + ")";
    case BlueActionKind::DeployDecoy:
      return "DeployDecoy(" + std::string(host_name(host)) + "," + std::to_string(decoy) + ")";
  }
  return "?";
}

std::string to_string(RedActionKind kind) {
  switch (kind) {
    case RedActionKind::DiscoverSubnet: return "DiscoverSubnet";
    case RedActionKind::ScanHost: return "ScanHost";
    case RedActionKind::Exploit: return "Exploit";
    case RedActionKind::Escalate: return "Escalate";
    case RedActionKind::Impact: return "Impact";
  }
  return "?";
}

std::string RedAction::to_string() const {
  switch (kind) {
    case RedActionKind::DiscoverSubnet:
      return "DiscoverSubnet(" + std::to_string(subnet) + ")";
    case RedActionKind::Impact: return "Impact";
    default:
      return sim::to_string(kind) + "(" + std::string(host_name(host)) + ")";
  }
}

}  // namespace cyberdef::sim
