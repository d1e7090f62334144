#include "sprofile/streamgen.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sprofile {

namespace {

// Box-Muller, cosine branch only: exactly two uniforms per draw.
double standard_normal(SplitMix64& rng) {
  const double u1 = rng.next_real();
  const double u2 = rng.next_real();
  return std::sqrt(-2.0 * std::log1p(-u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

object_id clamp_to_id(double v, std::uint32_t m) {
  if (!(v > 1.0)) return 1;
  if (v >= static_cast<double>(m)) return m;
  return static_cast<object_id>(std::llround(v));
}

object_id draw_id(const DistributionSpec& d, std::uint32_t m, SplitMix64& rng) {
  switch (d.kind) {
    case DistKind::Uniform:
      return static_cast<object_id>(1 + rng.next_below(m));
    case DistKind::Normal:
      return clamp_to_id(d.mu + d.sigma * standard_normal(rng), m);
    case DistKind::Lognormal: {
      // Solve for the underlying normal so the drawn values have mean mu and
      // standard deviation sigma.
      const double ratio = d.sigma / d.mu;
      const double s2 = std::log1p(ratio * ratio);
      const double mu_n = std::log(d.mu) - 0.5 * s2;
      return clamp_to_id(std::exp(mu_n + std::sqrt(s2) * standard_normal(rng)), m);
    }
  }
  throw std::logic_error("draw_id: bad distribution kind");
}

void validate_dist(const DistributionSpec& d, const char* which) {
  if (d.kind == DistKind::Uniform) return;
  if (!(d.sigma > 0.0)) {
    throw std::invalid_argument(std::string("StreamConfig: ") + which +
                                " sigma must be > 0");
  }
  if (d.kind == DistKind::Lognormal && !(d.mu > 0.0)) {
    throw std::invalid_argument(std::string("StreamConfig: ") + which +
                                " lognormal mean must be > 0");
  }
}

LogEvent parse_line(const std::string& line, const std::string& path,
                    std::uint64_t lineno) {
  const auto bad = [&](const char* why) -> LogEvent {
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + why);
  };
  std::size_t i = 0;
  std::uint64_t id = 0;
  while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
    id = id * 10 + static_cast<std::uint64_t>(line[i] - '0');
    if (id > std::numeric_limits<object_id>::max()) {
      return bad("object id out of range");
    }
    ++i;
  }
  if (i == 0) return bad("expected object id");
  if (id == 0) return bad("object id must be >= 1");
  if (i >= line.size() || line[i] != ' ') return bad("expected ' ' after id");
  ++i;
  if (i >= line.size() || (line[i] != '+' && line[i] != '-')) {
    return bad("expected '+' or '-' action");
  }
  const Action a = line[i] == '+' ? Action::Add : Action::Remove;
  ++i;
  if (i != line.size()) return bad("trailing characters after action");
  return LogEvent{static_cast<object_id>(id), a};
}

}  // namespace

StreamConfig preset_config(std::string_view name, std::uint64_t n,
                           std::uint32_t m, std::uint64_t seed) {
  StreamConfig cfg;
  cfg.n = n;
  cfg.m = m;
  cfg.seed = seed;
  const double md = static_cast<double>(m);
  if (name == "stream1") {
    cfg.pos = DistributionSpec{DistKind::Uniform, 0.0, 0.0};
    cfg.neg = DistributionSpec{DistKind::Uniform, 0.0, 0.0};
  } else if (name == "stream2") {
    cfg.pos = DistributionSpec{DistKind::Normal, 2.0 * md / 3.0, md / 6.0};
    cfg.neg = DistributionSpec{DistKind::Normal, md / 3.0, md / 6.0};
  } else if (name == "stream3") {
    cfg.pos = DistributionSpec{DistKind::Normal, 4.0 * md / 5.0, md};
    cfg.neg = DistributionSpec{DistKind::Lognormal, 3.0 * md / 5.0, md};
  } else {
    throw std::invalid_argument("unknown preset: " + std::string(name));
  }
  validate(cfg);
  return cfg;
}

void validate(const StreamConfig& cfg) {
  if (cfg.m == 0) throw std::invalid_argument("StreamConfig: m must be >= 1");
  if (!(cfg.p_add >= 0.0 && cfg.p_add <= 1.0)) {
    throw std::invalid_argument("StreamConfig: p_add must be in [0, 1]");
  }
  validate_dist(cfg.pos, "pos");
  validate_dist(cfg.neg, "neg");
}

std::vector<LogEvent> generate(const StreamConfig& cfg) {
  validate(cfg);
  SplitMix64 rng(cfg.seed);
  std::vector<LogEvent> events;
  events.reserve(cfg.n);
  for (std::uint64_t i = 0; i < cfg.n; ++i) {
    const bool add = rng.next_real() < cfg.p_add;
    const DistributionSpec& d = add ? cfg.pos : cfg.neg;
    events.push_back(
        LogEvent{draw_id(d, cfg.m, rng), add ? Action::Add : Action::Remove});
  }
  return events;
}

void write_stream(const std::string& path, std::span<const LogEvent> events) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (const LogEvent& e : events) {
    out << e.id << ' ' << (e.action == Action::Add ? '+' : '-') << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<LogEvent> read_stream(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::vector<LogEvent> events;
  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    events.push_back(parse_line(line, path, lineno));
  }
  return events;
}

}  // namespace sprofile
