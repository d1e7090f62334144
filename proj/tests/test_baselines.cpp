#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sprofile/indexed_heap.hpp"
#include "sprofile/oracle.hpp"
#include "sprofile/order_statistic_tree.hpp"
#include "sprofile/streamgen.hpp"

using namespace sprofile;

TEST_CASE("max heap tracks the maximum through adds and removes") {
  MaxIndexedHeap h(3);
  h.apply({2, Action::Add});
  CHECK(h.peek_root() == std::pair<object_id, frequency_t>{2, 1});
  h.apply({2, Action::Remove});
  CHECK(h.peek_root().second == 0);
  h.audit();
}

TEST_CASE("heap root matches the oracle extreme on random streams") {
  for (const char* preset : {"stream1", "stream2", "stream3"}) {
    CAPTURE(preset);
    const StreamConfig cfg = preset_config(preset, 4000, 37, 21);
    MaxIndexedHeap hi(cfg.m);
    MinIndexedHeap lo(cfg.m);
    Oracle o(cfg.m);
    std::size_t step = 0;
    for (const auto& e : generate(cfg)) {
      hi.apply(e);
      lo.apply(e);
      o.apply(e);
      REQUIRE(hi.peek_root().second == o.mode().frequency);
      REQUIRE(lo.peek_root().second == o.min_objects().frequency);
      REQUIRE(o.frequency(hi.peek_root().first) == hi.peek_root().second);
      REQUIRE(o.frequency(lo.peek_root().first) == lo.peek_root().second);
      if (++step % 128 == 0) {
        hi.audit();
        lo.audit();
      }
    }
    hi.audit();
    lo.audit();
  }
}

TEST_CASE("heap rejects out-of-range ids") {
  MaxIndexedHeap h(3);
  CHECK_THROWS_AS(h.apply({0, Action::Add}), std::invalid_argument);
  CHECK_THROWS_AS(h.apply({4, Action::Add}), std::invalid_argument);
  CHECK_THROWS_AS(MaxIndexedHeap(0), std::invalid_argument);
}

TEST_CASE("fresh tree answers order statistics over all-zero pairs") {
  OrderStatisticTree t(3);
  CHECK(t.kth(2).first == 0);
  // ties broken by id: ascending (0, id) order
  CHECK(t.kth(1) == std::pair<frequency_t, object_id>{0, 1});
  CHECK(t.kth(3) == std::pair<frequency_t, object_id>{0, 3});
  t.audit();

  t.apply({2, Action::Add});
  CHECK(t.kth(3) == std::pair<frequency_t, object_id>{1, 2});
  t.audit();
}

TEST_CASE("tree kth matches the oracle sorted array for every k") {
  for (const char* preset : {"stream1", "stream3"}) {
    CAPTURE(preset);
    const StreamConfig cfg = preset_config(preset, 3000, 29, 5);
    OrderStatisticTree t(cfg.m);
    Oracle o(cfg.m);
    std::size_t step = 0;
    for (const auto& e : generate(cfg)) {
      t.apply(e);
      o.apply(e);
      const auto sorted = o.sorted_frequencies();
      for (std::uint32_t k = 1; k <= cfg.m; ++k) {
        REQUIRE(t.kth(k).first == sorted[k - 1]);
        REQUIRE(o.frequency(t.kth(k).second) == t.kth(k).first);
      }
      if (++step % 256 == 0) t.audit();
    }
    t.audit();
  }
}

TEST_CASE("tree median position matches the oracle median") {
  const StreamConfig cfg = preset_config("stream2", 2500, 31, 8);
  OrderStatisticTree t(cfg.m);
  Oracle o(cfg.m);
  for (const auto& e : generate(cfg)) {
    t.apply(e);
    o.apply(e);
    REQUIRE(t.kth((cfg.m + 1) / 2).first == o.median().first);
  }
}

TEST_CASE("tree frequencies can go negative") {
  OrderStatisticTree t(2);
  t.apply({1, Action::Remove});
  t.apply({1, Action::Remove});
  CHECK(t.frequency(1) == -2);
  CHECK(t.kth(1) == std::pair<frequency_t, object_id>{-2, 1});
  CHECK(t.kth(2) == std::pair<frequency_t, object_id>{0, 2});
  t.audit();
}

TEST_CASE("tree rejects out-of-range arguments") {
  OrderStatisticTree t(3);
  CHECK_THROWS_AS(t.apply({4, Action::Add}), std::invalid_argument);
  CHECK_THROWS_AS(t.kth(0), std::invalid_argument);
  CHECK_THROWS_AS(t.kth(4), std::invalid_argument);
  CHECK_THROWS_AS(OrderStatisticTree(0), std::invalid_argument);
}

TEST_CASE("tree stays balanced under a skewed workload") {
  OrderStatisticTree t(64);
  // push one object far up and another far down
  for (int i = 0; i < 3000; ++i) t.apply({1, Action::Add});
  for (int i = 0; i < 3000; ++i) t.apply({2, Action::Remove});
  t.audit();
  CHECK(t.kth(64) == std::pair<frequency_t, object_id>{3000, 1});
  CHECK(t.kth(1) == std::pair<frequency_t, object_id>{-3000, 2});
}
