#include "cyberdef/netsim/observation.hpp"

#include <cstdio>

#include "cyberdef/common/errors.hpp"

namespace cyberdef::sim {

std::uint64_t Observation::packed() const {
  std::uint64_t bits = 0;
  for (HostId h = 0; h < kHostCount; ++h) {
    const std::uint64_t nibble =
        static_cast<std::uint64_t>(hosts_[h].activity) |
        (static_cast<std::uint64_t>(hosts_[h].compromise) << 2);
    bits |= nibble << (4 * h);
  }
  return bits;
}

Observation Observation::from_packed(std::uint64_t bits) {
  if (bits >> kObservationBits) {
    throw DomainError("observation vector wider than 52 bits");
  }
  Observation o;
  for (HostId h = 0; h < kHostCount; ++h) {
    const std::uint64_t nibble = (bits >> (4 * h)) & 0xf;
    const std::uint64_t activity = nibble & 0x3;
    if (activity == 3) {
      throw DomainError("reserved activity code point in observation nibble " +
                        std::to_string(h));
    }
    o.hosts_[h].activity = static_cast<Activity>(activity);
    o.hosts_[h].compromise = static_cast<Compromise>((nibble >> 2) & 0x3);
  }
  return o;
}

std::string Observation::packed_hex() const {
  char buf[14];
  std::snprintf(buf, sizeof(buf), "%013llx",
                static_cast<unsigned long long>(packed()));
  return buf;
}

Observation Observation::from_packed_hex(const std::string& hex) {
  if (hex.size() != 13) {
    throw ParseError("packed observation must be 13 hex digits, got '" + hex + "'");
  }
  std::uint64_t bits = 0;
  for (char c : hex) {
    int digit;
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (c >= 'a' && c <= 'f') digit = 10 + (c - 'a');
    else if (c >= 'A' && c <= 'F') digit = 10 + (c - 'A');
    else throw ParseError("bad hex digit in packed observation");
    bits = (bits << 4) | static_cast<std::uint64_t>(digit);
  }
  return from_packed(bits);
}

}  // namespace cyberdef::sim
