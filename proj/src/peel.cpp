#include "sprofile/peel.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "sprofile/profiler.hpp"

namespace sprofile {

namespace {

std::uint64_t edge_key(object_id a, object_id b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

void check_edge(std::uint32_t v, object_id a, object_id b,
                std::unordered_set<std::uint64_t>& seen,
                const std::string& where) {
  if (a < 1 || a > v || b < 1 || b > v) {
    throw std::invalid_argument(where + "edge endpoint outside [1, " +
                                std::to_string(v) + "]");
  }
  if (a == b) {
    throw std::invalid_argument(where + "self-loop at vertex " +
                                std::to_string(a));
  }
  if (!seen.insert(edge_key(a, b)).second) {
    throw std::invalid_argument(where + "duplicate edge " + std::to_string(a) +
                                " " + std::to_string(b));
  }
}

}  // namespace

Graph make_graph(std::uint32_t vertex_count,
                 std::vector<std::pair<object_id, object_id>> edges) {
  if (vertex_count == 0) {
    throw std::invalid_argument("Graph: vertex count must be >= 1");
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    check_edge(vertex_count, a, b, seen, "Graph: ");
  }
  return Graph{vertex_count, std::move(edges)};
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);

  Graph g;
  bool have_header = false;
  std::uint64_t declared_edges = 0;
  std::unordered_set<std::uint64_t> seen;
  std::string line;
  std::uint64_t lineno = 0;
  std::vector<std::pair<object_id, object_id>> raw;  // used when no header

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    const std::string where = path + ":" + std::to_string(lineno) + ": ";
    if (lineno == 1 && first == "p") {
      std::uint64_t v = 0;
      if (!(ls >> v >> declared_edges) || v == 0) {
        throw std::runtime_error(where + "malformed header, expected 'p <v> <e>'");
      }
      std::string extra;
      if (ls >> extra) throw std::runtime_error(where + "trailing tokens in header");
      g.vertex_count = static_cast<std::uint32_t>(v);
      have_header = true;
      continue;
    }
    object_id a = 0;
    object_id b = 0;
    std::istringstream es(line);
    if (!(es >> a >> b)) {
      throw std::runtime_error(where + "expected two vertex ids");
    }
    std::string extra;
    if (es >> extra) throw std::runtime_error(where + "trailing tokens");
    if (a == 0 || b == 0) throw std::runtime_error(where + "vertex ids are 1-based");
    if (have_header) {
      try {
        check_edge(g.vertex_count, a, b, seen, "");
      } catch (const std::invalid_argument& ex) {
        throw std::runtime_error(where + ex.what());
      }
      g.edges.emplace_back(a, b);
    } else {
      raw.emplace_back(a, b);
    }
  }

  if (!have_header) {
    std::uint32_t v = 0;
    for (const auto& [a, b] : raw) v = std::max({v, a, b});
    if (v == 0) throw std::runtime_error(path + ": no edges and no header");
    return make_graph(v, std::move(raw));
  }
  if (declared_edges != g.edges.size()) {
    throw std::runtime_error(path + ": header declares " +
                             std::to_string(declared_edges) + " edges, found " +
                             std::to_string(g.edges.size()));
  }
  return g;
}

PeelResult degeneracy_order(const Graph& g, const PeelObserver& on_select) {
  const std::uint32_t v = g.vertex_count;

  // CSR adjacency.
  std::vector<std::uint32_t> deg(v, 0);
  for (const auto& [a, b] : g.edges) {
    ++deg[a - 1];
    ++deg[b - 1];
  }
  std::vector<std::size_t> off(v + 1, 0);
  for (std::uint32_t u = 0; u < v; ++u) off[u + 1] = off[u] + deg[u];
  std::vector<std::uint32_t> adj(2 * g.edges.size());
  {
    std::vector<std::size_t> cursor(off.begin(), off.end() - 1);
    for (const auto& [a, b] : g.edges) {
      adj[cursor[a - 1]++] = b - 1;
      adj[cursor[b - 1]++] = a - 1;
    }
  }

  Profiler profiler(v);
  for (std::uint32_t u = 0; u < v; ++u) {
    for (std::uint32_t i = 0; i < deg[u]; ++i) profiler.increment(u + 1);
  }

  std::vector<char> alive(v, 1);
  PeelResult res;
  res.order.reserve(v);
  res.core.assign(v, 0);
  std::uint32_t current = 0;

  for (std::uint32_t step = 0; step < v; ++step) {
    const BlockInfo bottom = profiler.block_at(1);
    const std::uint32_t pos =
        bottom.f == -1 ? static_cast<std::uint32_t>(bottom.r) + 1 : 1;
    const auto [f, u] = profiler.at_position(pos);
    const auto d = static_cast<std::uint32_t>(f);  // live degrees are >= 0
    if (on_select) on_select(u, d);

    current = std::max(current, d);
    res.core[u - 1] = current;
    res.order.push_back(u);

    const std::uint32_t u0 = u - 1;
    for (std::size_t i = off[u0]; i < off[u0 + 1]; ++i) {
      if (alive[adj[i]]) profiler.decrement(adj[i] + 1);
    }
    // Step the removed vertex down to exactly -1 so it joins the dead pool.
    for (std::uint32_t t = 0; t <= d; ++t) profiler.decrement(u);
    alive[u0] = 0;
  }

  res.degeneracy = current;
  res.decrements = profiler.counters().decrements;
  return res;
}

}  // namespace sprofile
