#pragma once

#include "cyberdef/netsim/actions.hpp"
#include "cyberdef/netsim/rng.hpp"
#include "cyberdef/netsim/world.hpp"

namespace cyberdef::sim {

/// Strategy actually in effect at the world's current timestep (resolves
/// RedSwitch to one of the two base strategies).
RedStrategyKind effective_red_strategy(const WorldState& world);

/// One-time BLine path targeting. Idempotent; called by the environment at
/// the start of every step so the attack path is fixed from the first BLine
/// tick onward. Picks the entry user host (lowest index with access, falling
/// back to the lowest known user host) and grants the path hosts to red's
/// knowledge set.
void ensure_red_targeting(WorldState& world);

/// Chooses the red action for the current world. Pure in (world, rng stream):
/// Meander draws its next target uniformly among the open work items of the
/// lowest incomplete subnet; BLine walks entry -> enterprise gateway ->
/// operational server, retrying failed steps; RedSwitch delegates on the
/// switch timestep boundary.
RedAction red_next_action(const WorldState& world, Rng& rng);

/// The enterprise server a BLine path always pivots through.
inline constexpr HostId kBLineGateway = kFirstEnterpriseServer;

}  // namespace cyberdef::sim
