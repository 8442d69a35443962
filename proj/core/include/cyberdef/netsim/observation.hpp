#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "cyberdef/netsim/hosts.hpp"

namespace cyberdef::sim {

/// Per-tick activity the defender saw on a host. 2 bits; value 3 is reserved.
enum class Activity : std::uint8_t { None = 0, Scan = 1, Exploit = 2 };

/// Defender's compromise assessment of a host. 2 bits, all four used.
enum class Compromise : std::uint8_t { No = 0, Unknown = 1, User = 2, Privileged = 3 };

struct HostObservation {
  Activity activity = Activity::None;
  Compromise compromise = Compromise::No;

  bool operator==(const HostObservation&) const = default;
};

/// The blue agent's full 52-bit view of the network: 13 hosts x 4 bits.
/// Host h occupies bits [4h, 4h+4), lowest index in the least-significant
/// bits. Within a nibble the activity code is in bits 0-1 and the compromise
/// code in bits 2-3.
class Observation {
 public:
  Observation() = default;

  const HostObservation& host(HostId h) const { return hosts_[h]; }
  HostObservation& host(HostId h) { return hosts_[h]; }

  /// Pack into the canonical 52-bit vector (upper 12 bits of the result are 0).
  std::uint64_t packed() const;

  /// Inverse of packed(). Throws DomainError if any nibble carries the
  /// reserved activity code point 3.
  static Observation from_packed(std::uint64_t bits);

  /// 13 lowercase hex digits, most significant first; the wire form used in
  /// dataset/model files and traces.
  std::string packed_hex() const;
  static Observation from_packed_hex(const std::string& hex);

  bool operator==(const Observation&) const = default;

 private:
  std::array<HostObservation, kHostCount> hosts_{};
};

inline constexpr int kObservationBits = 4 * kHostCount;  // 52

}  // namespace cyberdef::sim
