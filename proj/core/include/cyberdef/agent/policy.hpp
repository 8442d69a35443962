#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "cyberdef/netsim/actions.hpp"
#include "cyberdef/netsim/observation.hpp"
#include "cyberdef/ood/model.hpp"

namespace cyberdef::agent {

enum class PolicyKind : std::uint8_t { AntiMeander, AntiBLine };

enum class MetaChoice : std::int64_t { Analysis = 0, Detector = 1, Mitigate = 2 };

PolicyKind other_policy(PolicyKind p);
const std::string& policy_tag(PolicyKind p);
PolicyKind policy_from_tag(const std::string& tag);

/// Per-observation summary kept in the agent's sliding evidence window.
struct ObsFacts {
  std::uint16_t scan_hosts = 0;     // activity == Scan
  std::uint16_t exploit_hosts = 0;  // activity == Exploit
  std::uint16_t alert_hosts = 0;    // any activity shown with compromise Unknown
};

ObsFacts summarize(const sim::Observation& obs);

/// Rule-table constants shared by both controller policies.
struct PolicyParams {
  int window_len = 10;          // observations kept as strategy evidence
  int monitor_cadence = 2;      // force Monitor when this many ticks passed without one
  int alert_rule_hits = 2;      // alerts on a host within the last 3 obs to trigger restore
  int alert_rule_cooldown = 3;  // min ticks between alert-triggered restores per host
  int hygiene_period = 8;       // ticks between precautionary op-server restores
  int evidence_enterprise_ticks = 2;  // alert ticks beyond subnet 1 implying a direct path
  int evidence_subnet1_hosts = 4;     // distinct scanned subnet-1 hosts implying a sweep
  int swap_dwell = 2;                 // min ticks between policy swaps
};

/// The decoy rollout order. Every entry pairs a host with the decoy type that
/// defeats its targeted service; enterprise servers are covered first.
std::vector<std::pair<sim::HostId, int>> decoy_plan(PolicyKind policy);

/// Everything the tree's behaviors share: the active controller policy, the
/// monitor handle per policy, the current/previous observation pair, the
/// evidence window, and the agent's private bookkeeping (its own decoy map,
/// restore timestamps, pending redeploys).
struct AgentContext {
  PolicyKind active_policy = PolicyKind::AntiMeander;
  std::array<const ood::TransitionModel*, 2> models{nullptr, nullptr};
  ood::MonitorConfig monitor;
  PolicyParams params;

  // Per-tick inputs maintained by the episode runner.
  int tick = 0;
  bool has_prev = false;

  // Evidence and private bookkeeping.
  std::deque<ObsFacts> window;
  std::array<std::uint8_t, sim::kHostCount> decoy_mirror{};
  std::array<int, sim::kHostCount> last_restore_tick{};
  std::uint16_t redeploy_pending = 0;
  int last_monitor_tick = -1000;
  int last_hygiene_tick = 0;
  int last_swap_tick = -1000;
  bool force_reselect = false;
  PolicyKind pending_policy = PolicyKind::AntiMeander;

  // Tick outputs and episode metrics.
  bool ood_flag = false;
  bool action_written = false;
  sim::BlueAction emitted;
  int ood_transitions = 0;
  int first_ood_t = -1;
  int swap_count = 0;

  AgentContext();

  const ood::TransitionModel* active_model() const {
    return models[static_cast<int>(active_policy)];
  }

  void push_window(const ObsFacts& facts);

  /// Post-step bookkeeping for the action the environment actually executed.
  void note_action_applied(const sim::BlueAction& action);
};

// Rule tables. All of these are total deterministic functions of the
// observation window and the agent's own bookkeeping.
MetaChoice decide_meta(const AgentContext& ctx, const sim::Observation& cur);
sim::BlueAction pick_analysis_action(const AgentContext& ctx, const sim::Observation& cur);
sim::BlueAction pick_detector_action(const AgentContext& ctx);
sim::BlueAction pick_mitigate_action(const AgentContext& ctx, const sim::Observation& cur);
sim::BlueAction pick_safe_action(const AgentContext& ctx, const sim::Observation& prev,
                                 const sim::Observation& cur);

/// Strategy classification from observable evidence, with hysteresis. Alert
/// activity beyond subnet 1 reads as a direct-path adversary; broad scanning
/// across subnet-1 hosts reads as a subnet sweep. A safe restore on the
/// previous tick forces a re-evaluation that prefers the other policy.
PolicyKind desired_policy(const AgentContext& ctx);

}  // namespace cyberdef::agent
