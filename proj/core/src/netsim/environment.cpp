#include "cyberdef/netsim/environment.hpp"

#include <algorithm>

#include "cyberdef/common/errors.hpp"

namespace cyberdef::sim {
namespace {

Activity max_activity(Activity a, Activity b) {
  return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

Compromise belief_of_access(AccessLevel a) {
  switch (a) {
    case AccessLevel::None: return Compromise::No;
    case AccessLevel::User: return Compromise::User;
    case AccessLevel::Privileged: return Compromise::Privileged;
  }
  return Compromise::No;
}

}  // namespace

Environment::Environment(EnvConfig config) : config_(config) {}

Observation Environment::reset(std::uint64_t seed, RedStrategySpec strategy) {
  rng_ = Rng(seed);
  world_ = WorldState{};
  world_.red_state.spec = strategy;
  belief_.fill(Compromise::No);
  pending_.fill(Activity::None);
  flash_.fill(Activity::None);
  analyzed_this_tick_.fill(false);
  last_red_ = RedAction::impact();

  const HostId foothold = static_cast<HostId>(rng_.below(kUserHostCount));
  world_.red_access[foothold] = AccessLevel::User;
  world_.mark_known(foothold);
  world_.mark_scanned(foothold);

  obs_ = Observation{};  // foothold is undetected until red acts and blue looks
  return obs_;
}

StepResult Environment::step(int blue_action_index) {
  if (!BlueAction::valid_index(blue_action_index)) {
    throw DomainError("invalid blue action index " + std::to_string(blue_action_index));
  }
  return step(BlueAction::from_index(blue_action_index));
}

StepResult Environment::step(const BlueAction& blue) {
  blue.index();  // validates the (kind, host, decoy) tuple shape

  StepResult result;
  flash_.fill(Activity::None);
  analyzed_this_tick_.fill(false);
  world_.impact_active = false;

  ensure_red_targeting(world_);
  const RedAction red = red_next_action(world_, rng_);
  last_red_ = red;

  apply_blue(blue, result.events);
  apply_red(red, result.events);

  // Background benign traffic logs a scan like any unrevealed red scan would.
  if (config_.noise_num > 0 &&
      rng_.chance(static_cast<std::uint64_t>(config_.noise_num),
                  static_cast<std::uint64_t>(config_.noise_den))) {
    const HostId h = static_cast<HostId>(rng_.below(kHostCount));
    pending_[h] = max_activity(pending_[h], Activity::Scan);
  }

  result.obs = build_observation(blue);
  result.reward = compute_reward(blue);
  obs_ = result.obs;
  ++world_.timestep;
  return result;
}

void Environment::apply_blue(const BlueAction& blue, std::vector<Event>& events) {
  switch (blue.kind) {
    case BlueActionKind::Sleep:
    case BlueActionKind::Monitor:
      break;  // observation-only; handled in build_observation
    case BlueActionKind::Analyze:
      belief_[blue.host] = belief_of_access(world_.red_access[blue.host]);
      analyzed_this_tick_[blue.host] = true;
      break;
    case BlueActionKind::Remove:
      if (world_.red_access[blue.host] == AccessLevel::User) {
        world_.red_access[blue.host] = AccessLevel::None;
        events.push_back({EventKind::AccessRemoved, blue.host});
      }
      if (world_.red_access[blue.host] == AccessLevel::None) {
        belief_[blue.host] = Compromise::No;
      }
      break;
    case BlueActionKind::Restore:
      world_.red_access[blue.host] = AccessLevel::None;
      world_.decoys[blue.host] = 0;
      world_.clear_scanned(blue.host);  // a reimaged host must be re-scanned
      belief_[blue.host] = Compromise::No;
      pending_[blue.host] = Activity::None;
      events.push_back({EventKind::HostRestored, blue.host});
      break;
    case BlueActionKind::DeployDecoy:
      if (!world_.has_decoy(blue.host, blue.decoy)) {
        world_.add_decoy(blue.host, blue.decoy);
        events.push_back({EventKind::DecoyDeployed, blue.host});
      }
      break;
  }
}

void Environment::apply_red(const RedAction& red, std::vector<Event>& events) {
  // Record activity on the touched host: decoyed hosts alert immediately,
  // clean hosts log invisibly until revealed.
  const auto touch = [&](HostId h, Activity kind) {
    if (world_.has_any_decoy(h)) {
      flash_[h] = max_activity(flash_[h], kind);
      events.push_back({EventKind::DecoyAlert, h});
    } else {
      pending_[h] = max_activity(pending_[h], kind);
    }
  };

  switch (red.kind) {
    case RedActionKind::DiscoverSubnet:
      for (HostId h = 0; h < kHostCount; ++h) {
        if (host_subnet(h) == red.subnet) world_.mark_known(h);
      }
      break;
    case RedActionKind::ScanHost:
      if (!world_.known(red.host)) break;  // fizzle
      world_.mark_scanned(red.host);
      touch(red.host, Activity::Scan);
      break;
    case RedActionKind::Exploit: {
      if (!world_.scanned(red.host) ||
          world_.red_access[red.host] != AccessLevel::None) {
        break;  // fizzle: precondition removed by the blue action this tick
      }
      touch(red.host, Activity::Exploit);
      if (world_.has_decoy(red.host, targeted_service(red.host))) {
        events.push_back({EventKind::ExploitBlocked, red.host});
      } else {
        world_.red_access[red.host] = AccessLevel::User;
        events.push_back({EventKind::ExploitSucceeded, red.host});
      }
      break;
    }
    case RedActionKind::Escalate:
      if (world_.red_access[red.host] != AccessLevel::User) break;  // fizzle
      world_.red_access[red.host] = AccessLevel::Privileged;
      touch(red.host, Activity::Exploit);
      events.push_back({EventKind::Escalated, red.host});
      break;
    case RedActionKind::Impact:
      if (world_.red_access[kOpServer] != AccessLevel::Privileged) break;  // fizzle
      world_.impact_active = true;
      touch(kOpServer, Activity::Exploit);
      events.push_back({EventKind::Impacted, kOpServer});
      break;
  }
}

Observation Environment::build_observation(const BlueAction& blue) {
  const bool monitor = blue.kind == BlueActionKind::Monitor;
  Observation o;
  for (HostId h = 0; h < kHostCount; ++h) {
    Activity revealed = Activity::None;
    if (monitor || analyzed_this_tick_[h]) {
      revealed = pending_[h];
      pending_[h] = Activity::None;
    }
    const Activity shown = max_activity(flash_[h], revealed);
    // Revealed (non-alert) exploit traces leave a persistent Unknown mark;
    // decoy alerts only color this tick's view.
    if (revealed == Activity::Exploit && belief_[h] == Compromise::No) {
      belief_[h] = Compromise::Unknown;
    }
    Compromise shown_belief = belief_[h];
    if (flash_[h] != Activity::None && shown_belief == Compromise::No) {
      shown_belief = Compromise::Unknown;
    }
    o.host(h) = HostObservation{shown, shown_belief};
  }
  return o;
}

double Environment::compute_reward(const BlueAction& blue) const {
  double r = 0.0;
  for (HostId h = 0; h < kHostCount; ++h) {
    if (world_.red_access[h] != AccessLevel::Privileged) continue;
    if (is_user_host(h)) r += config_.rewards.user_privileged_per_step;
    else if (is_enterprise_server(h)) r += config_.rewards.enterprise_privileged_per_step;
  }
  if (world_.impact_active) r += config_.rewards.impact_per_step;
  if (blue.kind == BlueActionKind::Restore) r += config_.rewards.restore_cost;
  return r;
}

}  // namespace cyberdef::sim
