#include "sprofile/bench.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "sprofile/indexed_heap.hpp"
#include "sprofile/order_statistic_tree.hpp"
#include "sprofile/profiler.hpp"

namespace sprofile {

namespace {

template <class Structure, class Query>
double run_loop(Structure& s, std::span<const LogEvent> events, Query query,
                std::uint64_t& checksum) {
  std::uint64_t acc = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (const LogEvent& e : events) {
    s.apply(e);
    acc += query(s);
  }
  const auto t1 = std::chrono::steady_clock::now();
  checksum += acc;
  return std::chrono::duration<double>(t1 - t0).count();
}

std::uint64_t fold(frequency_t f, object_id obj) {
  return static_cast<std::uint64_t>(f) ^ (static_cast<std::uint64_t>(obj) << 32);
}

struct NoopStructure {
  std::uint64_t acc = 0;
  void apply(const LogEvent& e) { acc += e.id; }
};

}  // namespace

std::string_view to_string(BenchImpl impl) {
  switch (impl) {
    case BenchImpl::SProfile: return "sprofile";
    case BenchImpl::Heap: return "heap";
    case BenchImpl::Ost: return "ost";
    case BenchImpl::Noop: return "noop";
  }
  return "?";
}

std::string_view to_string(BenchQuery query) {
  switch (query) {
    case BenchQuery::Mode: return "mode";
    case BenchQuery::Min: return "min";
    case BenchQuery::Median: return "median";
  }
  return "?";
}

BenchImpl parse_impl(std::string_view name) {
  if (name == "sprofile") return BenchImpl::SProfile;
  if (name == "heap") return BenchImpl::Heap;
  if (name == "ost") return BenchImpl::Ost;
  if (name == "noop") return BenchImpl::Noop;
  throw std::invalid_argument("unknown impl: " + std::string(name));
}

BenchQuery parse_query(std::string_view name) {
  if (name == "mode") return BenchQuery::Mode;
  if (name == "min") return BenchQuery::Min;
  if (name == "median") return BenchQuery::Median;
  throw std::invalid_argument("unknown query: " + std::string(name));
}

bool supports(BenchImpl impl, BenchQuery query) {
  if (impl == BenchImpl::Heap) {
    return query == BenchQuery::Mode || query == BenchQuery::Min;
  }
  return true;
}

double time_updates(BenchImpl impl, BenchQuery query, std::uint32_t m,
                    std::span<const LogEvent> events, std::uint64_t& checksum) {
  if (!supports(impl, query)) {
    throw std::invalid_argument(std::string("impl '") +
                                std::string(to_string(impl)) +
                                "' does not support query '" +
                                std::string(to_string(query)) + "'");
  }
  switch (impl) {
    case BenchImpl::SProfile: {
      Profiler p(m);
      switch (query) {
        case BenchQuery::Mode:
          return run_loop(p, events, [m](const Profiler& s) {
            const auto [f, obj] = s.at_position(m);
            return fold(f, obj);
          }, checksum);
        case BenchQuery::Min:
          return run_loop(p, events, [](const Profiler& s) {
            const auto [f, obj] = s.at_position(1);
            return fold(f, obj);
          }, checksum);
        case BenchQuery::Median:
          return run_loop(p, events, [](const Profiler& s) {
            const auto [f, obj] = s.median();
            return fold(f, obj);
          }, checksum);
      }
      break;
    }
    case BenchImpl::Heap: {
      if (query == BenchQuery::Mode) {
        MaxIndexedHeap h(m);
        return run_loop(h, events, [](const MaxIndexedHeap& s) {
          const auto [obj, f] = s.peek_root();
          return fold(f, obj);
        }, checksum);
      }
      MinIndexedHeap h(m);
      return run_loop(h, events, [](const MinIndexedHeap& s) {
        const auto [obj, f] = s.peek_root();
        return fold(f, obj);
      }, checksum);
    }
    case BenchImpl::Ost: {
      OrderStatisticTree t(m);
      const std::uint32_t k = query == BenchQuery::Mode ? m
                              : query == BenchQuery::Min ? 1
                                                         : (m + 1) / 2;
      return run_loop(t, events, [k](const OrderStatisticTree& s) {
        const auto [f, obj] = s.kth(k);
        return fold(f, obj);
      }, checksum);
    }
    case BenchImpl::Noop: {
      NoopStructure s;
      return run_loop(s, events, [](const NoopStructure& n) { return n.acc; },
                      checksum);
    }
  }
  throw std::logic_error("time_updates: bad impl");
}

BenchRecord bench_cell(BenchImpl impl, BenchQuery query,
                       const std::string& preset, std::uint64_t n,
                       std::uint32_t m, std::uint64_t seed,
                       std::span<const LogEvent> events, int repeats) {
  if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  double best = 0.0;
  std::uint64_t checksum = 0;
  for (int rep = 0; rep < repeats; ++rep) {
    const double elapsed = time_updates(impl, query, m, events, checksum);
    if (rep == 0 || elapsed < best) best = elapsed;
  }
  BenchRecord r;
  r.impl = impl;
  r.query = query;
  r.preset = preset;
  r.n = n;
  r.m = m;
  r.seed = seed;
  r.elapsed_seconds = best;
  r.updates_per_second =
      static_cast<double>(n) / (best > 0.0 ? best : 1e-12);
  return r;
}

std::string csv_header() {
  return "impl,query,preset,n,m,seed,elapsed_seconds,updates_per_second";
}

std::string to_csv(const BenchRecord& r) {
  std::ostringstream os;
  os.precision(9);
  os << to_string(r.impl) << ',' << to_string(r.query) << ',' << r.preset
     << ',' << r.n << ',' << r.m << ',' << r.seed << ',' << r.elapsed_seconds
     << ',' << r.updates_per_second;
  return os.str();
}

}  // namespace sprofile
