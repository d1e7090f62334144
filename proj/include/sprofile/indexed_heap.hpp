#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sprofile/events.hpp"

namespace sprofile {

// Indexed binary heap over a fixed universe of m objects. All m objects are
// always present; an event adjusts freq[x] by +-1 and sifts the object from
// its current slot. pos_ and heap_ stay mutually inverse so the slot of any
// object is known in O(1).
template <bool kMaxHeap>
class IndexedHeap {
 public:
  explicit IndexedHeap(std::uint32_t m) : freq_(m, 0), heap_(m), pos_(m) {
    if (m == 0) throw std::invalid_argument("IndexedHeap: universe size must be positive");
    std::iota(heap_.begin(), heap_.end(), 0u);
    std::iota(pos_.begin(), pos_.end(), 0u);
  }

  std::uint32_t universe() const { return static_cast<std::uint32_t>(freq_.size()); }

  void apply(const LogEvent& e) {
    const std::uint32_t x = check_id(e.id);
    if (e.action == Action::Add) {
      ++freq_[x];
      if constexpr (kMaxHeap) sift_up(pos_[x]); else sift_down(pos_[x]);
    } else {
      --freq_[x];
      if constexpr (kMaxHeap) sift_down(pos_[x]); else sift_up(pos_[x]);
    }
  }

  // Root element: maximum frequency for the max flavor, minimum for min.
  std::pair<object_id, frequency_t> peek_root() const {
    return {heap_[0] + 1, freq_[heap_[0]]};
  }

  frequency_t frequency(object_id x) const { return freq_[check_id(x)]; }

  // Heap property plus pos/heap inversion; throws std::logic_error.
  void audit() const {
    const std::size_t n = heap_.size();
    for (std::size_t s = 0; s < n; ++s) {
      if (pos_[heap_[s]] != s) {
        throw std::logic_error("IndexedHeap audit: pos/heap not inverse at slot " +
                               std::to_string(s));
      }
      if (s > 0 && before(freq_[heap_[s]], freq_[heap_[(s - 1) / 2]])) {
        throw std::logic_error("IndexedHeap audit: heap property violated at slot " +
                               std::to_string(s));
      }
    }
  }

 private:
  static bool before(frequency_t a, frequency_t b) {
    if constexpr (kMaxHeap) return a > b; else return a < b;
  }

  std::uint32_t check_id(object_id x) const {
    if (x < 1 || x > freq_.size()) {
      throw std::invalid_argument("IndexedHeap: object id " + std::to_string(x) +
                                  " outside [1, " + std::to_string(freq_.size()) + "]");
    }
    return x - 1;
  }

  void sift_up(std::uint32_t slot) {
    const std::uint32_t x = heap_[slot];
    const frequency_t f = freq_[x];
    while (slot > 0) {
      const std::uint32_t parent = (slot - 1) / 2;
      const std::uint32_t px = heap_[parent];
      if (!before(f, freq_[px])) break;
      heap_[slot] = px;
      pos_[px] = slot;
      slot = parent;
    }
    heap_[slot] = x;
    pos_[x] = slot;
  }

  void sift_down(std::uint32_t slot) {
    const auto n = static_cast<std::uint32_t>(heap_.size());
    const std::uint32_t x = heap_[slot];
    const frequency_t f = freq_[x];
    while (true) {
      std::uint32_t child = 2 * slot + 1;
      if (child >= n) break;
      if (child + 1 < n && before(freq_[heap_[child + 1]], freq_[heap_[child]])) {
        ++child;
      }
      if (!before(freq_[heap_[child]], f)) break;
      heap_[slot] = heap_[child];
      pos_[heap_[slot]] = slot;
      slot = child;
    }
    heap_[slot] = x;
    pos_[x] = slot;
  }

  std::vector<frequency_t> freq_;
  std::vector<std::uint32_t> heap_;  // slot -> object (0-based)
  std::vector<std::uint32_t> pos_;   // object -> slot
};

using MaxIndexedHeap = IndexedHeap<true>;
using MinIndexedHeap = IndexedHeap<false>;

}  // namespace sprofile
