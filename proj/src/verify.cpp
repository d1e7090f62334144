#include "sprofile/verify.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace sprofile {

namespace {

std::string describe(const ModeResult& r) {
  std::ostringstream os;
  os << "f=" << r.frequency << " objects={";
  for (std::size_t i = 0; i < r.objects.size() && i < 16; ++i) {
    os << (i ? "," : "") << r.objects[i];
  }
  if (r.objects.size() > 16) os << ",...";
  os << "}";
  return os.str();
}

std::optional<std::string> compare_tie_class(const char* what, ModeResult got,
                                             ModeResult want) {
  std::sort(got.objects.begin(), got.objects.end());
  std::sort(want.objects.begin(), want.objects.end());
  if (got.frequency != want.frequency || got.objects != want.objects) {
    return std::string(what) + " mismatch: got " + describe(got) + ", want " +
           describe(want);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> compare_with_oracle(const Profiler& p,
                                               const Oracle& o,
                                               std::uint32_t all_k_limit) {
  const std::uint32_t m = p.universe();

  for (object_id x = 1; x <= m; ++x) {
    if (p.frequency(x) != o.frequency(x)) {
      return "frequency(" + std::to_string(x) + ") = " +
             std::to_string(p.frequency(x)) + ", oracle has " +
             std::to_string(o.frequency(x));
    }
  }

  if (auto err = compare_tie_class("mode", p.mode(), o.mode())) return err;
  if (auto err = compare_tie_class("min", p.min_objects(), o.min_objects())) {
    return err;
  }

  const std::vector<frequency_t> sorted = o.sorted_frequencies();
  const auto check_kth = [&](std::uint32_t k) -> std::optional<std::string> {
    const auto [f, obj] = p.kth_largest(k);
    if (f != sorted[m - k]) {
      return "kth_largest(" + std::to_string(k) + ") frequency " +
             std::to_string(f) + ", oracle has " + std::to_string(sorted[m - k]);
    }
    if (o.frequency(obj) != f) {
      return "kth_largest(" + std::to_string(k) + ") object " +
             std::to_string(obj) + " not in the oracle tie class";
    }
    return std::nullopt;
  };
  if (m <= all_k_limit) {
    for (std::uint32_t k = 1; k <= m; ++k) {
      if (auto err = check_kth(k)) return err;
    }
  } else {
    for (std::uint32_t k : {1u, 2u, (m + 1) / 2, m - 1, m}) {
      if (auto err = check_kth(k)) return err;
    }
  }

  {
    const auto [f, obj] = p.median();
    if (f != sorted[(m - 1) / 2]) {
      return "median frequency " + std::to_string(f) + ", oracle has " +
             std::to_string(sorted[(m - 1) / 2]);
    }
    if (o.frequency(obj) != f) {
      return "median object " + std::to_string(obj) +
             " not in the oracle tie class";
    }
  }

  {
    const std::uint32_t k = std::min<std::uint32_t>(m, 3);
    const auto top = p.top_k_objects(k);
    std::vector<frequency_t> got;
    for (std::size_t i = 0; i < top.size(); ++i) {
      const auto [obj, f] = top[i];
      if (o.frequency(obj) != f) {
        return "top_k object " + std::to_string(obj) + " reported with f=" +
               std::to_string(f) + ", oracle has " +
               std::to_string(o.frequency(obj));
      }
      if (i > 0 && top[i - 1].second < f) return "top_k not nonincreasing";
      got.push_back(f);
    }
    std::vector<frequency_t> want(sorted.end() - k, sorted.end());
    std::sort(got.begin(), got.end());
    if (got != want) return "top_k frequency multiset mismatch";
  }

  if (p.histogram() != o.histogram()) return "histogram mismatch";

  if (p.live_blocks() != o.distinct_values()) {
    return "block count " + std::to_string(p.live_blocks()) +
           " != distinct value count " + std::to_string(o.distinct_values());
  }

  return std::nullopt;
}

VerifyReport verify_events(std::span<const LogEvent> events, std::uint32_t m,
                           const VerifyOptions& options) {
  VerifyReport report;
  Profiler p(m);
  if (options.disable_permutation_swap) p.set_permutation_swap_enabled(false);
  Oracle o(m);

  std::uint64_t stride = options.check_stride;
  if (stride == 0) {
    stride = events.size() <= 20000 ? 1 : std::max<std::uint64_t>(events.size() / 1000, 1);
  }

  const auto at_event = [&](std::uint64_t i) {
    return " after event " + std::to_string(i + 1) + "/" +
           std::to_string(events.size());
  };

  for (std::uint64_t i = 0; i < events.size(); ++i) {
    const WorkCounters before = p.counters();
    p.apply(events[i]);
    o.apply(events[i]);
    ++report.events;

    if (options.check_work_bounds) {
      const WorkCounters d = p.counters() - before;
      if (d.block_creates > 1 || d.block_deletes > 1 ||
          d.block_field_writes > 2 || d.perm_writes > 4 || d.ptrb_writes > 2 ||
          d.loop_iterations != 0) {
        report.work_ok = false;
        report.failure = "work bound exceeded" + at_event(i) + ": creates=" +
                         std::to_string(d.block_creates) + " deletes=" +
                         std::to_string(d.block_deletes) + " field_writes=" +
                         std::to_string(d.block_field_writes) + " perm_writes=" +
                         std::to_string(d.perm_writes) + " ptrb_writes=" +
                         std::to_string(d.ptrb_writes) + " loops=" +
                         std::to_string(d.loop_iterations);
        return report;
      }
    }

    if (options.check_space) {
      if (p.aux_slots() != 3 * static_cast<std::size_t>(m) ||
          p.live_blocks() > m || p.pool_high_water() > m) {
        report.space_ok = false;
        report.failure = "space bound violated" + at_event(i) + ": aux_slots=" +
                         std::to_string(p.aux_slots()) + " live_blocks=" +
                         std::to_string(p.live_blocks()) + " pool_high_water=" +
                         std::to_string(p.pool_high_water());
        return report;
      }
    }

    if ((i + 1) % stride == 0 || i + 1 == events.size()) {
      try {
        p.audit();
      } catch (const std::logic_error& ex) {
        report.audit_ok = false;
        report.failure = std::string(ex.what()) + at_event(i);
        return report;
      }
      if (auto err = compare_with_oracle(p, o, options.all_k_limit)) {
        report.queries_ok = false;
        report.failure = *err + at_event(i);
        return report;
      }
      ++report.checkpoints;
    }
  }

  return report;
}

}  // namespace sprofile
