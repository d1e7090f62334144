#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sprofile/oracle.hpp"
#include "sprofile/streamgen.hpp"

using namespace sprofile;

TEST_CASE("apply adjusts the frequency array") {
  Oracle o(3);
  o.apply({2, Action::Add});
  CHECK(o.raw() == std::vector<frequency_t>{0, 1, 0});
  o.apply({2, Action::Remove});
  CHECK(o.raw() == std::vector<frequency_t>{0, 0, 0});

  Oracle fresh(3);
  fresh.apply({1, Action::Remove});
  CHECK(fresh.raw() == std::vector<frequency_t>{-1, 0, 0});
}

TEST_CASE("mode and min report the full tie class") {
  Oracle o(3);
  CHECK(o.mode().frequency == 0);
  CHECK(o.mode().objects == std::vector<object_id>{1, 2, 3});
  CHECK(o.min_objects().objects == std::vector<object_id>{1, 2, 3});

  o.apply({2, Action::Add});
  o.apply({2, Action::Add});
  o.apply({1, Action::Remove});
  // F = [-1, 2, 0]
  CHECK(o.mode() == ModeResult{2, {2}});
  CHECK(o.min_objects() == ModeResult{-1, {1}});
}

TEST_CASE("kth_largest and median read the sorted array") {
  Oracle o(3);
  o.apply({1, Action::Remove});
  o.apply({3, Action::Add});
  o.apply({3, Action::Add});
  // F = [-1, 0, 2], sorted {-1, 0, 2}
  CHECK(o.kth_largest(1).first == 2);
  CHECK(o.kth_largest(2).first == 0);
  CHECK(o.kth_largest(3).first == -1);
  CHECK(o.median().first == 0);
  CHECK(o.sorted_frequencies() == std::vector<frequency_t>{-1, 0, 2});
}

TEST_CASE("histogram counts sum to m") {
  StreamConfig cfg = preset_config("stream1", 500, 23, 7);
  Oracle o(cfg.m);
  for (const auto& e : generate(cfg)) o.apply(e);
  std::int64_t total = 0;
  frequency_t prev = 0;
  bool first = true;
  for (const auto& [f, count] : o.histogram()) {
    if (!first) CHECK(f > prev);
    prev = f;
    first = false;
    CHECK(count > 0);
    total += count;
  }
  CHECK(total == 23);
  CHECK(o.distinct_values() == o.histogram().size());
}

TEST_CASE("sum of frequencies equals adds minus removes") {
  StreamConfig cfg = preset_config("stream2", 2000, 50, 11);
  Oracle o(cfg.m);
  for (const auto& e : generate(cfg)) o.apply(e);
  frequency_t sum = 0;
  for (frequency_t f : o.raw()) sum += f;
  CHECK(sum == o.adds() - o.removes());
  CHECK(sum == o.net_count());
}

TEST_CASE("rejects out-of-range arguments") {
  CHECK_THROWS_AS(Oracle(0), std::invalid_argument);
  Oracle o(3);
  CHECK_THROWS_AS(o.apply({0, Action::Add}), std::invalid_argument);
  CHECK_THROWS_AS(o.apply({4, Action::Add}), std::invalid_argument);
  CHECK_THROWS_AS(o.frequency(4), std::invalid_argument);
  CHECK_THROWS_AS(o.kth_largest(0), std::invalid_argument);
  CHECK_THROWS_AS(o.kth_largest(4), std::invalid_argument);
}
