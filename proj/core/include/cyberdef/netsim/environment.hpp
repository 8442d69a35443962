#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cyberdef/netsim/actions.hpp"
#include "cyberdef/netsim/observation.hpp"
#include "cyberdef/netsim/red_strategy.hpp"
#include "cyberdef/netsim/rng.hpp"
#include "cyberdef/netsim/world.hpp"

namespace cyberdef::sim {

enum class EventKind : std::uint8_t {
  DecoyAlert,       // red touched a decoyed host; alert raised immediately
  ExploitBlocked,   // the matching decoy defeated the exploit
  ExploitSucceeded,
  Escalated,
  Impacted,
  AccessRemoved,
  HostRestored,
  DecoyDeployed,
};

struct Event {
  EventKind kind;
  HostId host;
};

struct StepResult {
  Observation obs;
  double reward = 0.0;
  std::vector<Event> events;
};

struct EnvConfig {
  RewardConfig rewards;
  // Background benign traffic: per tick, probability noise_num/noise_den that
  // one uniformly drawn host logs a benign scan (visible on the next reveal).
  int noise_num = 35;
  int noise_den = 100;
};

/// Discrete-time red-vs-blue simulator over the fixed 13-host topology.
///
/// One step applies, in order: the blue action, then the red strategy's
/// action (chosen from the start-of-tick world; it fizzles if the blue action
/// removed its precondition), then background noise, and finally builds the
/// blue-side observation and reward. Episodes never terminate here; the
/// caller owns the horizon.
///
/// Observability rules:
///  - Red scans/exploits/escalations on undecoyed hosts are logged invisibly
///    per host and become visible only when revealed: Monitor reveals every
///    host's log, Analyze(h) reveals host h's. A revealed log is cleared.
///  - Any red action touching a decoyed host raises an alert in the same
///    tick's observation regardless of the blue action (activity set, shown
///    compromise at least Unknown). The alert does not persist.
///  - An exploit fails if and only if the host carries the decoy type
///    matching its targeted service.
///  - Revealed exploit activity marks the host's compromise belief Unknown;
///    Analyze(h) resolves the belief to the host's true level.
///  - Restore(h) wipes the host: red access, decoys, red's scan knowledge,
///    pending logs, and the compromise belief all reset.
class Environment {
 public:
  explicit Environment(EnvConfig config = {});

  /// Fresh world seeded with one undetected User-level foothold on a uniform
  /// user host. The returned observation is all-clear.
  Observation reset(std::uint64_t seed, RedStrategySpec strategy);

  /// Advances one tick. Throws DomainError on an invalid action index and
  /// leaves the world untouched.
  StepResult step(const BlueAction& blue);
  StepResult step(int blue_action_index);

  const WorldState& world() const { return world_; }
  const Observation& observation() const { return obs_; }
  const RedAction& last_red_action() const { return last_red_; }
  int timestep() const { return world_.timestep; }

 private:
  void apply_blue(const BlueAction& blue, std::vector<Event>& events);
  void apply_red(const RedAction& red, std::vector<Event>& events);
  Observation build_observation(const BlueAction& blue);
  double compute_reward(const BlueAction& blue) const;

  EnvConfig config_;
  WorldState world_;
  Rng rng_{0};
  RedAction last_red_;
  Observation obs_;

  // Blue-side bookkeeping (not part of the ground-truth world).
  std::array<Compromise, kHostCount> belief_{};          // persistent assessment
  std::array<Activity, kHostCount> pending_{};           // unrevealed activity log
  std::array<Activity, kHostCount> flash_{};             // this tick's decoy alerts
  std::array<bool, kHostCount> analyzed_this_tick_{};
};

}  // namespace cyberdef::sim
