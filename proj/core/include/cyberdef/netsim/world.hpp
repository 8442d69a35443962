#pragma once

#include <array>
#include <cstdint>

#include "cyberdef/netsim/actions.hpp"
#include "cyberdef/netsim/hosts.hpp"

namespace cyberdef::sim {

enum class AccessLevel : std::uint8_t { None = 0, User = 1, Privileged = 2 };

enum class RedStrategyKind : std::uint8_t { Meander, BLine, RedSwitch };

/// Which red agent drives an episode. RedSwitch behaves exactly like Meander
/// for timesteps below switch_timestep and like a freshly targeted BLine from
/// switch_timestep on.
struct RedStrategySpec {
  RedStrategyKind kind = RedStrategyKind::Meander;
  int switch_timestep = 0;  // RedSwitch only

  static RedStrategySpec meander() { return {RedStrategyKind::Meander, 0}; }
  static RedStrategySpec bline() { return {RedStrategyKind::BLine, 0}; }
  static RedStrategySpec red_switch(int t) { return {RedStrategyKind::RedSwitch, t}; }
};

/// Mutable progress of the red strategy. Meander needs no stored state (its
/// frontier is derived from the world); BLine keeps its fixed attack path.
struct RedStrategyState {
  RedStrategySpec spec;
  bool bline_targeted = false;  // path below is valid
  HostId bline_entry = 0;       // user host the path pivots through
};

struct WorldState {
  std::array<AccessLevel, kHostCount> red_access{};
  std::uint16_t red_known = 0;    // bitmask over hosts
  std::uint16_t red_scanned = 0;  // bitmask over hosts
  std::array<std::uint8_t, kHostCount> decoys{};  // bit (d-1) set = decoy type d deployed
  bool impact_active = false;
  RedStrategyState red_state;
  int timestep = 0;

  bool known(HostId h) const { return (red_known >> h) & 1; }
  bool scanned(HostId h) const { return (red_scanned >> h) & 1; }
  void mark_known(HostId h) { red_known |= std::uint16_t(1u << h); }
  void mark_scanned(HostId h) { red_scanned |= std::uint16_t(1u << h); }
  void clear_scanned(HostId h) { red_scanned &= std::uint16_t(~(1u << h)); }
  bool has_decoy(HostId h, int type) const { return (decoys[h] >> (type - 1)) & 1; }
  bool has_any_decoy(HostId h) const { return decoys[h] != 0; }
  void add_decoy(HostId h, int type) { decoys[h] |= std::uint8_t(1u << (type - 1)); }
};

/// Per-step reward shaping. All penalties are <= 0; an all-clean step with a
/// non-Restore blue action scores 0.
struct RewardConfig {
  double user_privileged_per_step = -0.1;
  double enterprise_privileged_per_step = -1.0;
  double impact_per_step = -10.0;
  double restore_cost = -1.0;
};

}  // namespace cyberdef::sim
