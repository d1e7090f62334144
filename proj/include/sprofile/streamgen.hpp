#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sprofile/events.hpp"

namespace sprofile {

// splitmix64. The whole generator is a pure function of the seed, so streams
// are bit-exact reproducible.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform real in [0, 1).
  double next_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) by scaled multiply.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }
};

enum class DistKind { Uniform, Normal, Lognormal };

// Id distribution in object-id units. mu/sigma are ignored for Uniform; for
// Lognormal they are the target mean and standard deviation of the drawn
// values, not the parameters of the underlying normal.
struct DistributionSpec {
  DistKind kind = DistKind::Uniform;
  double mu = 0.0;
  double sigma = 0.0;
};

struct StreamConfig {
  std::uint64_t n = 0;
  std::uint32_t m = 1;
  std::uint64_t seed = 0;
  double p_add = 0.7;
  DistributionSpec pos;  // id distribution for "add" events
  DistributionSpec neg;  // id distribution for "remove" events
};

// Named workloads. stream1: both sides uniform on [1, m]. stream2: adds
// Normal(2m/3, m/6), removes Normal(m/3, m/6). stream3: adds Normal(4m/5, m),
// removes Lognormal(3m/5, m).
StreamConfig preset_config(std::string_view name, std::uint64_t n,
                           std::uint32_t m, std::uint64_t seed);

// Throws std::invalid_argument on out-of-range parameters.
void validate(const StreamConfig& cfg);

// Exactly n events. Per event: one uniform real decides add vs remove, then
// one id draw from the matching distribution, rounded and clamped into
// [1, m]. Normal draws consume two uniforms (Box-Muller, cosine branch).
std::vector<LogEvent> generate(const StreamConfig& cfg);

// Stream file format: one event per line, "<id> <+|->", ASCII, LF line
// endings, no trailing whitespace.
void write_stream(const std::string& path, std::span<const LogEvent> events);
std::vector<LogEvent> read_stream(const std::string& path);

}  // namespace sprofile
