#pragma once

#include <cstdint>

namespace sprofile {

using object_id = std::uint32_t;   // object ids are 1-based: valid range [1, m]
using frequency_t = std::int64_t;  // net count; negative values are legal

enum class Action : std::uint8_t { Add, Remove };

constexpr Action opposite(Action a) {
  return a == Action::Add ? Action::Remove : Action::Add;
}

struct LogEvent {
  object_id id;
  Action action;

  friend bool operator==(const LogEvent&, const LogEvent&) = default;
};

}  // namespace sprofile
