#pragma once

#include <cstdint>
#include <string_view>

namespace cyberdef::bt {

enum class Status : std::uint8_t { Success, Failure, Running };

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::Success: return "Success";
    case Status::Failure: return "Failure";
    case Status::Running: return "Running";
  }
  return "?";
}

}  // namespace cyberdef::bt
