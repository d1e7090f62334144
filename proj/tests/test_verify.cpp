#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sprofile/streamgen.hpp"
#include "sprofile/verify.hpp"
#include "support.hpp"

using namespace sprofile;

TEST_CASE("clean replays verify on every preset") {
  for (const char* preset : {"stream1", "stream2", "stream3"}) {
    CAPTURE(preset);
    const auto cfg = preset_config(preset, 3000, 25, 31);
    const auto events = generate(cfg);
    const auto report = verify_events(events, cfg.m);
    INFO(report.failure);
    CHECK(report.ok());
    CHECK(report.events == events.size());
    CHECK(report.checkpoints == events.size());  // auto stride is 1 here
  }
}

TEST_CASE("empty event list verifies vacuously") {
  const auto report = verify_events({}, 10);
  CHECK(report.ok());
  CHECK(report.events == 0);
}

TEST_CASE("large inputs fall back to sampled checkpoints") {
  const auto cfg = preset_config("stream1", 50000, 400, 3);
  const auto events = generate(cfg);
  const auto report = verify_events(events, cfg.m);
  CHECK(report.ok());
  CHECK(report.checkpoints < events.size());
  CHECK(report.checkpoints >= 1000);
}

TEST_CASE("disabling the permutation swap is detected") {
  const auto cfg = preset_config("stream1", 2000, 20, 8);
  const auto events = generate(cfg);
  const auto report =
      verify_events(events, cfg.m, {.disable_permutation_swap = true});
  CHECK(!report.ok());
  CHECK(!report.queries_ok);
  CHECK(!report.failure.empty());
}

TEST_CASE("adversarial sequences verify too") {
  for (std::uint32_t m : {1u, 2u, 5u, 32u}) {
    for (const auto& events : testsupport::adversarial_sequences(m, 2000)) {
      const auto report = verify_events(events, m, {.check_stride = 1});
      INFO(report.failure);
      REQUIRE(report.ok());
    }
  }
}

TEST_CASE("compare_with_oracle flags a diverging oracle") {
  Profiler p(5);
  Oracle o(5);
  p.apply({3, Action::Add});
  o.apply({3, Action::Add});
  CHECK(!compare_with_oracle(p, o, 128));
  o.apply({2, Action::Add});  // oracle drifts ahead
  const auto err = compare_with_oracle(p, o, 128);
  REQUIRE(err);
  CHECK(err->find("frequency") != std::string::npos);
}
