#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "sprofile/events.hpp"
#include "sprofile/oracle.hpp"
#include "sprofile/profiler.hpp"

namespace sprofile {

struct VerifyOptions {
  // 0 = auto: every event when n <= 20000, else about 1000 checkpoints.
  std::uint64_t check_stride = 0;
  // Check kth_largest for every k when m is at most this; otherwise only a
  // few representative k values.
  std::uint32_t all_k_limit = 128;
  // Per-event structural write bounds (one create/delete, two field writes,
  // four permutation writes, two PtrB writes, no loops).
  bool check_work_bounds = true;
  // 3m auxiliary slots and pool occupancy <= m after every event.
  bool check_space = true;
  // Fault injection for the verifier's own mutation test.
  bool disable_permutation_swap = false;
};

struct VerifyReport {
  bool queries_ok = true;
  bool audit_ok = true;
  bool work_ok = true;
  bool space_ok = true;
  std::uint64_t events = 0;
  std::uint64_t checkpoints = 0;
  std::string failure;  // first failure, empty when ok

  bool ok() const { return queries_ok && audit_ok && work_ok && space_ok; }
};

// Every query on the profiler against the oracle: frequency for all objects,
// mode, min, kth_largest (all k, or a sample for large m), median, top-k,
// histogram, and the block count against the distinct-value count. Returns a
// description of the first mismatch, or nullopt.
std::optional<std::string> compare_with_oracle(const Profiler& p,
                                               const Oracle& o,
                                               std::uint32_t all_k_limit);

// Replays the events through a fresh profiler and oracle side by side,
// auditing and comparing at checkpoints; stops at the first failure.
VerifyReport verify_events(std::span<const LogEvent> events, std::uint32_t m,
                           const VerifyOptions& options = {});

}  // namespace sprofile
