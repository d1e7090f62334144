#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sprofile/events.hpp"
#include "sprofile/profiler.hpp"

namespace sprofile {

// Brute-force reference: a plain frequency array, fully scanned or sorted on
// every query. Deliberately naive; this is the ground truth the block-set
// profiler is tested against.
class Oracle {
 public:
  explicit Oracle(std::uint32_t m) : freq_(m, 0) {
    if (m == 0) throw std::invalid_argument("Oracle: universe size must be positive");
  }

  std::uint32_t universe() const { return static_cast<std::uint32_t>(freq_.size()); }

  void apply(const LogEvent& e) {
    frequency_t& f = freq_[check_id(e.id)];
    if (e.action == Action::Add) {
      ++f;
      ++adds_;
    } else {
      --f;
      ++removes_;
    }
  }

  frequency_t frequency(object_id x) const { return freq_[check_id(x)]; }

  ModeResult mode() const { return extreme(/*maximum=*/true); }
  ModeResult min_objects() const { return extreme(/*maximum=*/false); }

  std::pair<frequency_t, object_id> kth_largest(std::uint32_t k) const {
    check_k(k);
    const frequency_t f = sorted_frequencies()[freq_.size() - k];
    return {f, any_object_with(f)};
  }

  std::pair<frequency_t, object_id> median() const {
    const frequency_t f = sorted_frequencies()[(freq_.size() - 1) / 2];
    return {f, any_object_with(f)};
  }

  std::vector<std::pair<frequency_t, std::int64_t>> histogram() const {
    std::map<frequency_t, std::int64_t> counts;
    for (frequency_t f : freq_) ++counts[f];
    return {counts.begin(), counts.end()};
  }

  std::vector<frequency_t> sorted_frequencies() const {
    std::vector<frequency_t> s = freq_;
    std::sort(s.begin(), s.end());
    return s;
  }

  std::size_t distinct_values() const {
    auto s = sorted_frequencies();
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  const std::vector<frequency_t>& raw() const { return freq_; }
  std::int64_t adds() const { return adds_; }
  std::int64_t removes() const { return removes_; }
  std::int64_t net_count() const { return adds_ - removes_; }

 private:
  std::uint32_t check_id(object_id x) const {
    if (x < 1 || x > freq_.size()) {
      throw std::invalid_argument("Oracle: object id " + std::to_string(x) +
                                  " outside [1, " + std::to_string(freq_.size()) + "]");
    }
    return x - 1;
  }

  void check_k(std::uint32_t k) const {
    if (k < 1 || k > freq_.size()) {
      throw std::invalid_argument("Oracle: k " + std::to_string(k) +
                                  " outside [1, " + std::to_string(freq_.size()) + "]");
    }
  }

  ModeResult extreme(bool maximum) const {
    ModeResult out;
    out.frequency = freq_[0];
    for (frequency_t f : freq_) {
      if (maximum ? f > out.frequency : f < out.frequency) out.frequency = f;
    }
    for (std::uint32_t i = 0; i < freq_.size(); ++i) {
      if (freq_[i] == out.frequency) out.objects.push_back(i + 1);
    }
    return out;
  }

  object_id any_object_with(frequency_t f) const {
    for (std::uint32_t i = 0; i < freq_.size(); ++i) {
      if (freq_[i] == f) return i + 1;
    }
    throw std::logic_error("Oracle: no object with requested frequency");
  }

  std::vector<frequency_t> freq_;
  std::int64_t adds_ = 0;
  std::int64_t removes_ = 0;
};

}  // namespace sprofile
