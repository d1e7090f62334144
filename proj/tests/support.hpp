// Shared test helpers: reference implementations and input builders that must
// stay independent of the code under test.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sprofile/events.hpp"
#include "sprofile/oracle.hpp"
#include "sprofile/peel.hpp"
#include "sprofile/streamgen.hpp"
#include "sprofile/window.hpp"

namespace testsupport {

using namespace sprofile;

// ---- graphs ----------------------------------------------------------------

inline Graph complete_graph(std::uint32_t n) {
  std::vector<std::pair<object_id, object_id>> edges;
  for (object_id a = 1; a <= n; ++a) {
    for (object_id b = a + 1; b <= n; ++b) edges.emplace_back(a, b);
  }
  return make_graph(n, std::move(edges));
}

inline Graph path_graph(std::uint32_t n) {
  std::vector<std::pair<object_id, object_id>> edges;
  for (object_id a = 1; a + 1 <= n; ++a) edges.emplace_back(a, a + 1);
  return make_graph(n, std::move(edges));
}

// Vertex 1 is the hub.
inline Graph star_graph(std::uint32_t n) {
  std::vector<std::pair<object_id, object_id>> edges;
  for (object_id a = 2; a <= n; ++a) edges.emplace_back(1, a);
  return make_graph(n, std::move(edges));
}

inline Graph random_graph(std::uint32_t n, double p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::pair<object_id, object_id>> edges;
  for (object_id a = 1; a <= n; ++a) {
    for (object_id b = a + 1; b <= n; ++b) {
      if (rng.next_real() < p) edges.emplace_back(a, b);
    }
  }
  return make_graph(n, std::move(edges));
}

// Uniform random tree on n vertices (random parent attachment).
inline Graph random_tree(std::uint32_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::pair<object_id, object_id>> edges;
  for (object_id a = 2; a <= n; ++a) {
    const auto parent = static_cast<object_id>(1 + rng.next_below(a - 1));
    edges.emplace_back(parent, a);
  }
  return make_graph(n, std::move(edges));
}

// ---- bucket-queue peeling reference ----------------------------------------

struct PeelReference {
  std::vector<std::uint32_t> core;  // core[i] for vertex i+1
  std::uint32_t degeneracy = 0;
};

// Textbook bucket-queue peeling, independent of the profiler: vertices sit in
// buckets by current degree with stale entries skipped lazily.
inline PeelReference bucket_peel(const Graph& g) {
  const std::uint32_t n = g.vertex_count;
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const auto& [a, b] : g.edges) {
    adj[a - 1].push_back(b - 1);
    adj[b - 1].push_back(a - 1);
  }
  std::vector<std::uint32_t> deg(n);
  std::vector<std::vector<std::uint32_t>> bucket(n + 1);
  for (std::uint32_t u = 0; u < n; ++u) {
    deg[u] = static_cast<std::uint32_t>(adj[u].size());
    bucket[deg[u]].push_back(u);
  }

  PeelReference res;
  res.core.assign(n, 0);
  std::vector<char> dead(n, 0);
  std::uint32_t d = 0;
  std::uint32_t current = 0;
  std::uint32_t processed = 0;
  while (processed < n) {
    while (d <= n && bucket[d].empty()) ++d;
    const std::uint32_t u = bucket[d].back();
    bucket[d].pop_back();
    if (dead[u] || deg[u] != d) continue;  // stale entry
    dead[u] = 1;
    ++processed;
    current = std::max(current, d);
    res.core[u] = current;
    for (std::uint32_t w : adj[u]) {
      if (dead[w]) continue;
      --deg[w];
      bucket[deg[w]].push_back(w);
      if (deg[w] < d) d = deg[w];
    }
  }
  res.degeneracy = current;
  return res;
}

// ---- adversarial event sequences -------------------------------------------

// Deterministic patterns that stress block creation, deletion, merging and
// negative frequencies harder than the random presets do.
inline std::vector<std::vector<LogEvent>> adversarial_sequences(std::uint32_t m,
                                                                std::size_t n) {
  std::vector<std::vector<LogEvent>> out;

  {  // hammer one object, with a remove every third event
    std::vector<LogEvent> ev;
    for (std::size_t i = 0; i < n; ++i) {
      ev.push_back({1, i % 3 == 2 ? Action::Remove : Action::Add});
    }
    out.push_back(std::move(ev));
  }
  {  // round-robin adds then round-robin removes: giant blocks sliding
    std::vector<LogEvent> ev;
    for (std::size_t i = 0; i < n / 2; ++i) {
      ev.push_back({static_cast<object_id>(1 + i % m), Action::Add});
    }
    while (ev.size() < n) {
      ev.push_back({static_cast<object_id>(1 + ev.size() % m), Action::Remove});
    }
    out.push_back(std::move(ev));
  }
  {  // staircase: object x receives x % 7 + 1 adds, then everything unwinds
    std::vector<LogEvent> ev;
    object_id x = 1;
    while (ev.size() < n / 2) {
      for (std::uint32_t k = 0; k <= x % 7 && ev.size() < n / 2; ++k) {
        ev.push_back({x, Action::Add});
      }
      x = x % m + 1;
    }
    std::size_t mirror = ev.size();
    for (std::size_t i = 0; i < mirror && ev.size() < n; ++i) {
      ev.push_back({ev[i].id, Action::Remove});
    }
    while (ev.size() < n) ev.push_back({1, Action::Add});
    out.push_back(std::move(ev));
  }
  {  // remove-only: everything goes negative
    std::vector<LogEvent> ev;
    for (std::size_t i = 0; i < n; ++i) {
      ev.push_back({static_cast<object_id>(1 + (i * 7) % m), Action::Remove});
    }
    out.push_back(std::move(ev));
  }

  return out;
}

// ---- window ground truth -----------------------------------------------------

// Compares every windowed query against a fresh oracle fed only the buffered
// events. Returns the first mismatch.
inline std::optional<std::string> window_matches_buffer(
    const WindowedProfiler& w, std::uint32_t m) {
  Oracle o(m);
  for (const LogEvent& e : w.contents()) o.apply(e);

  for (object_id x = 1; x <= m; ++x) {
    if (w.frequency(x) != o.frequency(x)) {
      return "window frequency(" + std::to_string(x) + ") = " +
             std::to_string(w.frequency(x)) + ", buffer oracle has " +
             std::to_string(o.frequency(x));
    }
  }
  const auto cmp_tie = [](ModeResult a, ModeResult b) {
    std::sort(a.objects.begin(), a.objects.end());
    std::sort(b.objects.begin(), b.objects.end());
    return a.frequency == b.frequency && a.objects == b.objects;
  };
  if (!cmp_tie(w.mode(), o.mode())) return std::string("window mode mismatch");
  if (!cmp_tie(w.min_objects(), o.min_objects())) {
    return std::string("window min mismatch");
  }
  const auto sorted = o.sorted_frequencies();
  if (w.median().first != sorted[(m - 1) / 2]) {
    return std::string("window median mismatch");
  }
  if (o.frequency(w.median().second) != w.median().first) {
    return std::string("window median object not in tie class");
  }
  const std::uint32_t k = std::min<std::uint32_t>(m, 5);
  const auto top = w.top_k_objects(k);
  std::vector<frequency_t> got;
  for (std::size_t i = 0; i < top.size(); ++i) {
    if (i > 0 && top[i - 1].second < top[i].second) {
      return std::string("window top_k not nonincreasing");
    }
    if (o.frequency(top[i].first) != top[i].second) {
      return std::string("window top_k object frequency mismatch");
    }
    got.push_back(top[i].second);
  }
  std::sort(got.begin(), got.end());
  const std::vector<frequency_t> want(sorted.end() - k, sorted.end());
  if (got != want) return std::string("window top_k multiset mismatch");
  if (w.profiler().histogram() != o.histogram()) {
    return std::string("window histogram mismatch");
  }
  return std::nullopt;
}

}  // namespace testsupport
