#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sprofile/events.hpp"

namespace sprofile {

// Simple undirected graph, vertices 1..vertex_count. No self-loops, no
// parallel edges.
struct Graph {
  std::uint32_t vertex_count = 0;
  std::vector<std::pair<object_id, object_id>> edges;
};

// Validates endpoints, self-loops and duplicates; throws std::invalid_argument.
Graph make_graph(std::uint32_t vertex_count,
                 std::vector<std::pair<object_id, object_id>> edges);

// Whitespace-separated edge list, one "a b" pair per line, with an optional
// leading header "p <vertices> <edges>". Without a header the vertex count is
// the largest endpoint. Errors carry the offending line number.
Graph read_edge_list(const std::string& path);

struct PeelResult {
  std::vector<object_id> order;      // removal order
  std::vector<std::uint32_t> core;   // core[i] = core number of vertex i+1
  std::uint32_t degeneracy = 0;      // max over core
  std::uint64_t decrements = 0;      // profiler decrements spent: 2E + V
};

// Called once per removal with the vertex and its degree at selection time.
using PeelObserver = std::function<void(object_id, std::uint32_t)>;

// Degeneracy ordering driven by the profiler as the min-degree structure:
// vertex degree is the frequency, removing a vertex decrements each live
// neighbor, and the removed vertex itself is stepped down to -1 so all dead
// vertices pool in the bottom block. The live minimum is then position
// PtrB[1].r + 1 when the bottom block holds -1, else position 1. Total work
// is O(V + E).
PeelResult degeneracy_order(const Graph& g, const PeelObserver& on_select = {});

}  // namespace sprofile
