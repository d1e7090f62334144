#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sprofile/events.hpp"
#include "sprofile/profiler.hpp"

namespace sprofile {

// Restricts the profile to the last W events. When a push evicts the oldest
// buffered event (x, c), the inner profiler first replays (x, opposite(c)),
// so it always equals a fresh profiler fed exactly the buffered events.
class WindowedProfiler {
 public:
  WindowedProfiler(std::uint32_t m, std::size_t window)
      : inner_(m), buf_(checked(window)) {}

  std::size_t window() const { return buf_.size(); }
  std::size_t size() const { return size_; }

  void push(const LogEvent& e) {
    if (size_ == buf_.size()) {
      const LogEvent oldest = buf_[head_];
      inner_.apply(LogEvent{oldest.id, opposite(oldest.action)});
      buf_[head_] = e;
      head_ = head_ + 1 == buf_.size() ? 0 : head_ + 1;
    } else {
      std::size_t slot = head_ + size_;
      if (slot >= buf_.size()) slot -= buf_.size();
      buf_[slot] = e;
      ++size_;
    }
    inner_.apply(e);
  }

  // Buffered events, oldest first.
  std::vector<LogEvent> contents() const {
    std::vector<LogEvent> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) {
      std::size_t slot = head_ + i;
      if (slot >= buf_.size()) slot -= buf_.size();
      out.push_back(buf_[slot]);
    }
    return out;
  }

  const Profiler& profiler() const { return inner_; }

  ModeResult mode() const { return inner_.mode(); }
  ModeResult min_objects() const { return inner_.min_objects(); }
  std::pair<frequency_t, object_id> median() const { return inner_.median(); }
  std::vector<std::pair<object_id, frequency_t>> top_k_objects(
      std::uint32_t k) const {
    return inner_.top_k_objects(k);
  }
  frequency_t frequency(object_id x) const { return inner_.frequency(x); }

 private:
  static std::size_t checked(std::size_t window) {
    if (window == 0) {
      throw std::invalid_argument("WindowedProfiler: window size must be >= 1");
    }
    return window;
  }

  Profiler inner_;
  std::vector<LogEvent> buf_;
  std::size_t head_ = 0;
  std::size_t size_ = 0;
};

}  // namespace sprofile
