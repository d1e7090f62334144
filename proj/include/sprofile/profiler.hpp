#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sprofile/events.hpp"

namespace sprofile {

// Counters bumped by every structural write the profiler performs. A single
// increment/decrement does at most: 1 block create, 1 block delete, 2 block
// field writes, 4 permutation writes, 2 PtrB writes, and no loop iterations.
// loop_iterations counts iterations of every loop statement in the class, so
// a zero diff across an update proves the update path is loop-free.
struct WorkCounters {
  std::uint64_t increments = 0;
  std::uint64_t decrements = 0;
  std::uint64_t block_creates = 0;
  std::uint64_t block_deletes = 0;
  std::uint64_t block_field_writes = 0;
  std::uint64_t perm_writes = 0;
  std::uint64_t ptrb_writes = 0;
  std::uint64_t loop_iterations = 0;

  WorkCounters operator-(const WorkCounters& o) const {
    return WorkCounters{increments - o.increments,
                        decrements - o.decrements,
                        block_creates - o.block_creates,
                        block_deletes - o.block_deletes,
                        block_field_writes - o.block_field_writes,
                        perm_writes - o.perm_writes,
                        ptrb_writes - o.ptrb_writes,
                        loop_iterations - o.loop_iterations};
  }
};

struct ModeResult {
  frequency_t frequency = 0;
  std::vector<object_id> objects;  // full tie class, in sorted-position order

  friend bool operator==(const ModeResult&, const ModeResult&) = default;
};

// 1-based (l, r, f) view of one block, for tests and diagnostics.
struct BlockInfo {
  std::int64_t l = 0;
  std::int64_t r = 0;
  frequency_t f = 0;

  friend bool operator==(const BlockInfo&, const BlockInfo&) = default;
};

// Profile of a dynamic frequency array over a fixed universe of m objects.
//
// Conceptually there is a frequency array F (one counter per object) and its
// ascending sort T. T is never stored: it is carried by a set of blocks, each
// a maximal run (l, r, f) of equal values in T, plus three arrays of m
// integers:
//
//   FtoT[obj]  sorted position of the object        (F -> T)
//   TtoF[pos]  object sitting at a sorted position  (T -> F)
//   PtrB[pos]  block covering a sorted position
//
// TtoF and PtrB are both position-indexed, so they live interleaved in one
// array of (object, block) slots; an update then pulls both from a single
// cache line. Total auxiliary storage stays exactly 3m integers.
//
// An increment moves the touched object to the right edge of its block, peels
// that edge position off into the block one value higher (merging with the
// right neighbor when it already holds f+1). A decrement mirrors this at the
// left edge. Both are a constant number of writes, so any add/remove event is
// O(1) and queries against the sorted order (mode, min, k-th, median,
// histogram) read straight off the blocks.
//
// Positions and ids are 1-based in the public API and 0-based internally.
// Frequencies are signed: removing an object that was never added is allowed
// and drives its count below zero. Counts are plain 64-bit signed integers
// with no overflow handling.
//
// Single writer only. Queries may run concurrently with each other but not
// with an update; note that queries bump loop_iterations, so even reads are
// not const in the memory-model sense.
class Profiler {
 public:
  static constexpr std::uint32_t kMaxUniverse = 1u << 30;

  explicit Profiler(std::uint32_t m) {
    if (m == 0 || m > kMaxUniverse) {
      throw std::invalid_argument("Profiler: universe size must be in [1, " +
                                  std::to_string(kMaxUniverse) + "], got " +
                                  std::to_string(m));
    }
    m_ = m;
    ftot_.resize(m);
    std::iota(ftot_.begin(), ftot_.end(), 0u);
    slots_.resize(m);
    for (std::uint32_t i = 0; i < m; ++i) {
      slots_[i] = PosSlot{i, 0};
      ++counters_.loop_iterations;
    }
    blocks_.reserve(m);  // live blocks never exceed m, so this never moves
    blocks_.push_back(Block{0, static_cast<std::int32_t>(m) - 1, 0});
    live_blocks_ = 1;
  }

  std::uint32_t universe() const { return m_; }
  frequency_t net_count() const { return net_count_; }

  void apply(const LogEvent& e) {
    if (e.action == Action::Add) {
      increment(e.id);
    } else {
      decrement(e.id);
    }
  }

  void increment(object_id x) {
    const std::uint32_t obj = check_id(x);
    const std::uint32_t rank = ftot_[obj];
    const std::uint32_t bi = slots_[rank].block;
    // Snapshot before any mutation: the block may be deleted below.
    const std::int32_t r = blocks_[bi].r;
    const frequency_t f = blocks_[bi].f;
    const auto pos = static_cast<std::uint32_t>(r);
    swap_positions(rank, pos, obj);
    blocks_[bi].r = r - 1;
    ++counters_.block_field_writes;
    if (blocks_[bi].r < blocks_[bi].l) release_block(bi);
    if (pos + 1 < m_ && blocks_[slots_[pos + 1].block].f == f + 1) {
      const std::uint32_t nb = slots_[pos + 1].block;
      blocks_[nb].l -= 1;
      ++counters_.block_field_writes;
      slots_[pos].block = nb;
    } else {
      slots_[pos].block = alloc_block(r, r, f + 1);
    }
    ++counters_.ptrb_writes;
    ++net_count_;
    ++counters_.increments;
  }

  void decrement(object_id x) {
    const std::uint32_t obj = check_id(x);
    const std::uint32_t rank = ftot_[obj];
    const std::uint32_t bi = slots_[rank].block;
    const std::int32_t l = blocks_[bi].l;
    const frequency_t f = blocks_[bi].f;
    const auto pos = static_cast<std::uint32_t>(l);
    swap_positions(rank, pos, obj);
    blocks_[bi].l = l + 1;
    ++counters_.block_field_writes;
    if (blocks_[bi].r < blocks_[bi].l) release_block(bi);
    if (pos > 0 && blocks_[slots_[pos - 1].block].f == f - 1) {
      const std::uint32_t nb = slots_[pos - 1].block;
      blocks_[nb].r += 1;
      ++counters_.block_field_writes;
      slots_[pos].block = nb;
    } else {
      slots_[pos].block = alloc_block(l, l, f - 1);
    }
    ++counters_.ptrb_writes;
    --net_count_;
    ++counters_.decrements;
  }

  frequency_t frequency(object_id x) const {
    return blocks_[slots_[ftot_[check_id(x)]].block].f;
  }

  // Top block: the maximum frequency and every object attaining it.
  ModeResult mode() const { return tie_class(slots_[m_ - 1].block); }

  // Bottom block: the minimum frequency and every object attaining it.
  ModeResult min_objects() const { return tie_class(slots_[0].block); }

  // (frequency, object) at a 1-based position of the ascending sorted order.
  std::pair<frequency_t, object_id> at_position(std::uint32_t pos) const {
    if (pos < 1 || pos > m_) {
      throw std::invalid_argument("Profiler: position " + std::to_string(pos) +
                                  " outside [1, " + std::to_string(m_) + "]");
    }
    const PosSlot s = slots_[pos - 1];
    return {blocks_[s.block].f, s.obj + 1};
  }

  std::pair<frequency_t, object_id> kth_largest(std::uint32_t k) const {
    if (k < 1 || k > m_) {
      throw std::invalid_argument("Profiler: k " + std::to_string(k) +
                                  " outside [1, " + std::to_string(m_) + "]");
    }
    return at_position(m_ - k + 1);
  }

  // Lower median: position floor((m+1)/2) over all m objects.
  std::pair<frequency_t, object_id> median() const {
    return at_position((m_ + 1) / 2);
  }

  // k pairs read from the top of the sorted order, frequencies nonincreasing.
  std::vector<std::pair<object_id, frequency_t>> top_k_objects(
      std::uint32_t k) const {
    if (k < 1 || k > m_) {
      throw std::invalid_argument("Profiler: k " + std::to_string(k) +
                                  " outside [1, " + std::to_string(m_) + "]");
    }
    std::vector<std::pair<object_id, frequency_t>> out;
    out.reserve(k);
    for (std::uint32_t p = m_; p > m_ - k; --p) {
      out.emplace_back(slots_[p - 1].obj + 1, blocks_[slots_[p - 1].block].f);
      ++counters_.loop_iterations;
    }
    return out;
  }

  // (frequency, #objects) per block, strictly increasing in frequency;
  // counts sum to m. Costs O(#blocks).
  std::vector<std::pair<frequency_t, std::int64_t>> histogram() const {
    std::vector<std::pair<frequency_t, std::int64_t>> out;
    out.reserve(live_blocks_);
    std::uint32_t pos = 0;
    while (pos < m_) {
      const Block& b = blocks_[slots_[pos].block];
      out.emplace_back(b.f, static_cast<std::int64_t>(b.r - b.l) + 1);
      pos = static_cast<std::uint32_t>(b.r) + 1;
      ++counters_.loop_iterations;
    }
    return out;
  }

  // All live blocks in ascending order, 1-based.
  std::vector<BlockInfo> blocks() const {
    std::vector<BlockInfo> out;
    out.reserve(live_blocks_);
    std::uint32_t pos = 0;
    while (pos < m_) {
      const Block& b = blocks_[slots_[pos].block];
      out.push_back(BlockInfo{b.l + 1, b.r + 1, b.f});
      pos = static_cast<std::uint32_t>(b.r) + 1;
      ++counters_.loop_iterations;
    }
    return out;
  }

  // Block covering a 1-based sorted position, as a 1-based triple.
  BlockInfo block_at(std::uint32_t pos) const {
    if (pos < 1 || pos > m_) {
      throw std::invalid_argument("Profiler: position " + std::to_string(pos) +
                                  " outside [1, " + std::to_string(m_) + "]");
    }
    const Block& b = blocks_[slots_[pos - 1].block];
    return BlockInfo{b.l + 1, b.r + 1, b.f};
  }

  const WorkCounters& counters() const { return counters_; }

  std::size_t live_blocks() const { return live_blocks_; }

  // High-water mark of the block pool; never exceeds m.
  std::size_t pool_high_water() const { return blocks_.size(); }

  // Auxiliary integer slots held by the position arrays: exactly 3m
  // (FtoT plus the interleaved TtoF/PtrB pairs).
  std::size_t aux_slots() const { return ftot_.size() + 2 * slots_.size(); }

  // Fault-injection hook used by the verifier's self-test: with the swap
  // disabled the structure stays self-consistent but maps frequencies to the
  // wrong objects, which oracle comparison must catch.
  void set_permutation_swap_enabled(bool enabled) { swap_enabled_ = enabled; }

  // Full O(m) consistency check; throws std::logic_error on any violation.
  // Verifies: FtoT/TtoF are mutually inverse permutations, the block walk
  // tiles [1, m] with strictly increasing frequencies, every position points
  // at the block covering it, sum of f over positions equals the net event
  // count, and the live block count matches the walk.
  void audit() const {
    if (ftot_.size() != m_ || slots_.size() != m_) {
      audit_fail("position arrays resized");
    }
    for (std::uint32_t i = 0; i < m_; ++i) {
      ++counters_.loop_iterations;
      if (ftot_[i] >= m_) audit_fail("FtoT out of range at " + std::to_string(i));
      if (slots_[ftot_[i]].obj != i) {
        audit_fail("FtoT/TtoF not inverse at object " + std::to_string(i + 1));
      }
    }
    std::size_t walked = 0;
    frequency_t prev_f = 0;
    std::int64_t weighted_sum = 0;
    std::uint32_t pos = 0;
    while (pos < m_) {
      ++counters_.loop_iterations;
      const std::uint32_t bi = slots_[pos].block;
      if (bi >= blocks_.size()) audit_fail("PtrB references unallocated slot");
      const Block& b = blocks_[bi];
      if (b.l != static_cast<std::int32_t>(pos)) {
        audit_fail("block does not start at walk position " +
                   std::to_string(pos + 1));
      }
      if (b.r < b.l || b.r >= static_cast<std::int32_t>(m_)) {
        audit_fail("block bounds out of range at position " +
                   std::to_string(pos + 1));
      }
      if (walked > 0 && b.f <= prev_f) {
        audit_fail("block frequencies not strictly increasing at position " +
                   std::to_string(pos + 1));
      }
      for (std::int32_t i = b.l; i <= b.r; ++i) {
        ++counters_.loop_iterations;
        if (slots_[static_cast<std::uint32_t>(i)].block != bi) {
          audit_fail("PtrB not constant across block at position " +
                     std::to_string(i + 1));
        }
      }
      weighted_sum += b.f * (static_cast<std::int64_t>(b.r - b.l) + 1);
      prev_f = b.f;
      ++walked;
      pos = static_cast<std::uint32_t>(b.r) + 1;
    }
    if (walked != live_blocks_) {
      audit_fail("live block count " + std::to_string(live_blocks_) +
                 " does not match walk count " + std::to_string(walked));
    }
    if (live_blocks_ > m_) audit_fail("pool occupancy exceeds m");
    if (blocks_.size() > m_) audit_fail("pool high water exceeds m");
    if (weighted_sum != net_count_) {
      audit_fail("sum of frequencies " + std::to_string(weighted_sum) +
                 " != net event count " + std::to_string(net_count_));
    }
  }

 private:
  // Freed slots reuse `l` as the free-list link.
  struct Block {
    std::int32_t l;
    std::int32_t r;
    frequency_t f;
  };

  // One sorted position: the object sitting there (TtoF) and the covering
  // block (PtrB).
  struct PosSlot {
    std::uint32_t obj;
    std::uint32_t block;
  };

  std::uint32_t check_id(object_id x) const {
    if (x < 1 || x > m_) {
      throw std::invalid_argument("Profiler: object id " + std::to_string(x) +
                                  " outside [1, " + std::to_string(m_) + "]");
    }
    return x - 1;
  }

  // Exchanges the objects at two sorted positions within one block. The
  // caller already resolved slots_[a].obj and passes it as oa.
  void swap_positions(std::uint32_t a, std::uint32_t b, std::uint32_t oa) {
    if (!swap_enabled_) return;
    const std::uint32_t ob = slots_[b].obj;
    slots_[a].obj = ob;
    slots_[b].obj = oa;
    ftot_[oa] = b;
    ftot_[ob] = a;
    counters_.perm_writes += 4;
  }

  std::uint32_t alloc_block(std::int32_t l, std::int32_t r, frequency_t f) {
    std::uint32_t bi;
    if (free_head_ >= 0) {
      bi = static_cast<std::uint32_t>(free_head_);
      free_head_ = blocks_[bi].l;
      blocks_[bi] = Block{l, r, f};
    } else {
      bi = static_cast<std::uint32_t>(blocks_.size());
      blocks_.push_back(Block{l, r, f});
    }
    ++live_blocks_;
    ++counters_.block_creates;
    return bi;
  }

  void release_block(std::uint32_t bi) {
    blocks_[bi].l = free_head_;
    free_head_ = static_cast<std::int32_t>(bi);
    --live_blocks_;
    ++counters_.block_deletes;
  }

  ModeResult tie_class(std::uint32_t bi) const {
    const Block& b = blocks_[bi];
    ModeResult out;
    out.frequency = b.f;
    out.objects.reserve(static_cast<std::size_t>(b.r - b.l) + 1);
    for (std::int32_t i = b.l; i <= b.r; ++i) {
      out.objects.push_back(slots_[static_cast<std::uint32_t>(i)].obj + 1);
      ++counters_.loop_iterations;
    }
    return out;
  }

  [[noreturn]] static void audit_fail(const std::string& what) {
    throw std::logic_error("Profiler audit: " + what);
  }

  std::uint32_t m_ = 0;
  std::vector<std::uint32_t> ftot_;  // object -> sorted position
  std::vector<PosSlot> slots_;       // sorted position -> (object, block)
  std::vector<Block> blocks_;
  std::int32_t free_head_ = -1;
  std::size_t live_blocks_ = 0;
  frequency_t net_count_ = 0;
  bool swap_enabled_ = true;
  mutable WorkCounters counters_;
};

}  // namespace sprofile
