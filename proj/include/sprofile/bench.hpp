#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "sprofile/events.hpp"
#include "sprofile/streamgen.hpp"

namespace sprofile {

// Noop is a hidden baseline that only streams the events; it exists so tests
// can show the timed region excludes stream generation.
enum class BenchImpl { SProfile, Heap, Ost, Noop };
enum class BenchQuery { Mode, Min, Median };

std::string_view to_string(BenchImpl impl);
std::string_view to_string(BenchQuery query);
BenchImpl parse_impl(std::string_view name);
BenchQuery parse_query(std::string_view name);

// The heap answers mode and min only; the other implementations answer all
// three queries.
bool supports(BenchImpl impl, BenchQuery query);

struct BenchRecord {
  BenchImpl impl = BenchImpl::SProfile;
  BenchQuery query = BenchQuery::Mode;
  std::string preset;
  std::uint64_t n = 0;
  std::uint32_t m = 0;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;
  double updates_per_second = 0.0;
};

// Wall time of one update+query pass over the events: apply each event, then
// read the query result (frequency plus one representative object, folded
// into the checksum so the loop cannot be optimized away). Structure
// construction and event generation happen outside the timed region.
double time_updates(BenchImpl impl, BenchQuery query, std::uint32_t m,
                    std::span<const LogEvent> events, std::uint64_t& checksum);

// Runs time_updates `repeats` times and keeps the minimum.
BenchRecord bench_cell(BenchImpl impl, BenchQuery query,
                       const std::string& preset, std::uint64_t n,
                       std::uint32_t m, std::uint64_t seed,
                       std::span<const LogEvent> events, int repeats);

std::string csv_header();
std::string to_csv(const BenchRecord& r);

}  // namespace sprofile
