#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace cyberdef::sim {

/// Index into the fixed 13-host topology. The layout never changes:
///   0..4   user hosts          (subnet 1)
///   5..7   enterprise servers  (subnet 2)
///   8      defender host       (subnet 2)
///   9..11  operational hosts   (subnet 3)
///   12     operational server  (subnet 3)
using HostId = int;

inline constexpr int kHostCount = 13;
inline constexpr HostId kFirstUserHost = 0;
inline constexpr HostId kUserHostCount = 5;
inline constexpr HostId kFirstEnterpriseServer = 5;
inline constexpr HostId kEnterpriseServerCount = 3;
inline constexpr HostId kDefenderHost = 8;
inline constexpr HostId kFirstOpHost = 9;
inline constexpr HostId kOpHostCount = 3;
inline constexpr HostId kOpServer = 12;

enum class HostRole : std::uint8_t {
  UserHost,
  EnterpriseServer,
  DefenderHost,
  OpHost,
  OpServer,
};

constexpr HostRole host_role(HostId h) {
  if (h < kFirstEnterpriseServer) return HostRole::UserHost;
  if (h < kDefenderHost) return HostRole::EnterpriseServer;
  if (h == kDefenderHost) return HostRole::DefenderHost;
  if (h < kOpServer) return HostRole::OpHost;
  return HostRole::OpServer;
}

/// Subnet number in {1, 2, 3}.
constexpr int host_subnet(HostId h) {
  if (h < kFirstEnterpriseServer) return 1;
  if (h <= kDefenderHost) return 2;
  return 3;
}

constexpr bool is_user_host(HostId h) { return h >= 0 && h < kUserHostCount; }
constexpr bool is_enterprise_server(HostId h) {
  return h >= kFirstEnterpriseServer && h < kFirstEnterpriseServer + kEnterpriseServerCount;
}

/// The one service an exploit against host h targets. A decoy of exactly this
/// type defeats the exploit; any decoy raises an alert when touched.
/// Values are in [1, 7].
constexpr int targeted_service(HostId h) { return 1 + (3 * h) % 7; }

/// Priority used when the agent must pick one host to act on among several
/// candidates. Higher is more valuable to defend.
constexpr int host_value(HostId h) {
  switch (host_role(h)) {
    case HostRole::OpServer: return 100;
    case HostRole::EnterpriseServer: return 80;
    case HostRole::OpHost: return 60;
    case HostRole::DefenderHost: return 40;
    case HostRole::UserHost: return 20;
  }
  return 0;
}

constexpr std::string_view host_name(HostId h) {
  constexpr std::string_view names[kHostCount] = {
      "User0", "User1", "User2", "User3", "User4",
      "Enterprise0", "Enterprise1", "Enterprise2", "Defender",
      "Op0", "Op1", "Op2", "OpServer"};
  return names[h];
}

inline constexpr std::array<HostId, kHostCount> all_hosts() {
  std::array<HostId, kHostCount> a{};
  for (int i = 0; i < kHostCount; ++i) a[i] = i;
  return a;
}

}  // namespace cyberdef::sim
