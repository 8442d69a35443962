#include "cyberdef/netsim/red_strategy.hpp"

#include <vector>

namespace cyberdef::sim {
namespace {

std::vector<HostId> subnet_hosts(int subnet) {
  std::vector<HostId> out;
  for (HostId h = 0; h < kHostCount; ++h) {
    if (host_subnet(h) == subnet) out.push_back(h);
  }
  return out;
}

HostId pick(const std::vector<HostId>& candidates, Rng& rng) {
  return candidates[rng.below(candidates.size())];
}

RedAction meander_next(const WorldState& w, Rng& rng) {
  if (w.red_access[kOpServer] == AccessLevel::Privileged) return RedAction::impact();

  // Lowest subnet not yet fully privileged is the current frontier.
  for (int subnet = 1; subnet <= 3; ++subnet) {
    const auto hosts = subnet_hosts(subnet);
    bool complete = true;
    for (HostId h : hosts) complete &= w.red_access[h] == AccessLevel::Privileged;
    if (complete) continue;

    for (HostId h : hosts) {
      if (!w.known(h)) return RedAction::discover(subnet);
    }
    std::vector<HostId> unscanned, unexploited, unescalated;
    for (HostId h : hosts) {
      if (!w.scanned(h)) unscanned.push_back(h);
      else if (w.red_access[h] == AccessLevel::None) unexploited.push_back(h);
      else if (w.red_access[h] == AccessLevel::User) unescalated.push_back(h);
    }
    if (!unscanned.empty()) return RedAction::scan(pick(unscanned, rng));
    if (!unexploited.empty()) return RedAction::exploit(pick(unexploited, rng));
    return RedAction::escalate(pick(unescalated, rng));
  }
  return RedAction::impact();
}

RedAction bline_next(const WorldState& w) {
  const HostId entry = w.red_state.bline_entry;
  const HostId gw = kBLineGateway;

  if (w.red_access[kOpServer] == AccessLevel::Privileged) return RedAction::impact();
  // Path recon first: a freshly targeted (or freshly rebuilt) gateway gets
  // scanned before anything else.
  if (!w.scanned(gw)) return RedAction::scan(gw);
  // Re-establish the user foothold the path pivots through.
  if (w.red_access[entry] == AccessLevel::None) {
    if (!w.scanned(entry)) return RedAction::scan(entry);
    return RedAction::exploit(entry);
  }
  if (w.red_access[entry] == AccessLevel::User) return RedAction::escalate(entry);
  // Entry privileged: take the gateway, then the operational server.
  if (w.red_access[gw] == AccessLevel::None) return RedAction::exploit(gw);
  if (w.red_access[gw] == AccessLevel::User) return RedAction::escalate(gw);
  if (!w.scanned(kOpServer)) return RedAction::scan(kOpServer);
  if (w.red_access[kOpServer] == AccessLevel::None) return RedAction::exploit(kOpServer);
  return RedAction::escalate(kOpServer);
}

HostId derive_bline_entry(const WorldState& w) {
  for (HostId h = 0; h < kUserHostCount; ++h) {
    if (w.red_access[h] != AccessLevel::None) return h;
  }
  for (HostId h = 0; h < kUserHostCount; ++h) {
    if (w.known(h)) return h;
  }
  return 0;
}

}  // namespace

RedStrategyKind effective_red_strategy(const WorldState& world) {
  const auto& spec = world.red_state.spec;
  if (spec.kind != RedStrategyKind::RedSwitch) return spec.kind;
  return world.timestep >= spec.switch_timestep ? RedStrategyKind::BLine
                                                : RedStrategyKind::Meander;
}

void ensure_red_targeting(WorldState& world) {
  if (effective_red_strategy(world) != RedStrategyKind::BLine) return;
  if (world.red_state.bline_targeted) return;
  world.red_state.bline_targeted = true;
  world.red_state.bline_entry = derive_bline_entry(world);
  // Full network knowledge of the fixed path.
  world.mark_known(world.red_state.bline_entry);
  world.mark_known(kBLineGateway);
  world.mark_known(kOpServer);
}

RedAction red_next_action(const WorldState& world, Rng& rng) {
  if (effective_red_strategy(world) == RedStrategyKind::Meander) {
    return meander_next(world, rng);
  }
  if (world.red_state.bline_targeted) return bline_next(world);
  // Untargeted direct query (tests poke hand-built worlds): derive the path
  // on the fly without mutating.
  WorldState scratch = world;
  ensure_red_targeting(scratch);
  return bline_next(scratch);
}

}  // namespace cyberdef::sim
