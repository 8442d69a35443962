#pragma once

#include <cstdint>
#include <string>

#include "cyberdef/netsim/hosts.hpp"

namespace cyberdef::sim {

enum class BlueActionKind : std::uint8_t {
  Sleep,
  Monitor,
  Analyze,
  Remove,
  Restore,
  DeployDecoy,
};

/// One defender action. The integer index is a stable bijection over the
/// whole space:
///   0                Sleep
///   1                Monitor
///   2 + 10h + 0      Analyze(h)
///   2 + 10h + 1      Remove(h)
///   2 + 10h + 2      Restore(h)
///   2 + 10h + 2 + d  DeployDecoy(h, d), d in [1, 7]
/// for h in [0, 13), giving 2 + 13*10 = 132 actions in total.
struct BlueAction {
  BlueActionKind kind = BlueActionKind::Sleep;
  HostId host = 0;   // unused for Sleep/Monitor
  int decoy = 0;     // DeployDecoy only, in [1, 7]

  static BlueAction sleep() { return {BlueActionKind::Sleep, 0, 0}; }
  static BlueAction monitor() { return {BlueActionKind::Monitor, 0, 0}; }
  static BlueAction analyze(HostId h) { return {BlueActionKind::Analyze, h, 0}; }
  static BlueAction remove(HostId h) { return {BlueActionKind::Remove, h, 0}; }
  static BlueAction restore(HostId h) { return {BlueActionKind::Restore, h, 0}; }
  static BlueAction deploy_decoy(HostId h, int d) { return {BlueActionKind::DeployDecoy, h, d}; }

  int index() const;
  static BlueAction from_index(int index);
  static bool valid_index(int index) { return index >= 0 && index < kBlueActionCount; }

  std::string to_string() const;
  bool operator==(const BlueAction&) const = default;

  static constexpr int kBlueActionCount = 2 + kHostCount * 10;
};

inline constexpr int kBlueActionCount = BlueAction::kBlueActionCount;

enum class RedActionKind : std::uint8_t {
  DiscoverSubnet,
  ScanHost,
  Exploit,
  Escalate,
  Impact,
};

/// Attacker action. Never exposed through Observation; kept for ground-truth
/// traces and tests only.
struct RedAction {
  RedActionKind kind = RedActionKind::Impact;
  int subnet = 0;   // DiscoverSubnet only
  HostId host = 0;  // ScanHost/Exploit/Escalate only

  static RedAction discover(int subnet) { return {RedActionKind::DiscoverSubnet, subnet, 0}; }
  static RedAction scan(HostId h) { return {RedActionKind::ScanHost, 0, h}; }
  static RedAction exploit(HostId h) { return {RedActionKind::Exploit, 0, h}; }
  static RedAction escalate(HostId h) { return {RedActionKind::Escalate, 0, h}; }
  static RedAction impact() { return {RedActionKind::Impact, 0, 0}; }

  std::string to_string() const;
  bool operator==(const RedAction&) const = default;
};

std::string to_string(RedActionKind kind);

}  // namespace cyberdef::sim
