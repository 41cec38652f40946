#pragma once

// Adjacency view of a Pascal graph (or any simple undirected graph) with
// 1-based vertices. Vertices can be marked failed; they keep their index but
// lose every incident edge, so reports always name the original vertices.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pascalnet/error.hpp"
#include "pascalnet/matrix.hpp"

namespace pascalnet {

using Vertex = std::uint32_t;
using Hops = std::uint32_t;
inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;

  // Edges may be given in any order; duplicates collapse and self-loops are
  // rejected.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges) {
    Graph g(order);
    for (const Edge& e : edges) {
      g.check_vertex(e.u);
      g.check_vertex(e.v);
      if (e.u == e.v) {
        throw DomainError("self-loop at vertex " + std::to_string(e.u));
      }
      g.adj_[e.u - 1].push_back(e.v);
      g.adj_[e.v - 1].push_back(e.u);
    }
    for (auto& list : g.adj_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return g;
  }

  std::size_t order() const { return adj_.size(); }

  bool alive(Vertex v) const { return in_range(v) && alive_[v - 1]; }

  std::size_t live_count() const {
    return static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), true));
  }

  std::vector<Vertex> live_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= order(); ++v) {
      if (alive_[v - 1]) out.push_back(v);
    }
    return out;
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v - 1];
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    if (!in_range(u) || !in_range(v)) return false;
    const auto& list = adj_[u - 1];
    return std::binary_search(list.begin(), list.end(), v);
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& list : adj_) twice += list.size();
    return twice / 2;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 1; u <= order(); ++u) {
      for (Vertex v : adj_[u - 1]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  // Copy with the given vertices marked failed and their edges dropped.
  Graph without(std::span<const Vertex> failed) const {
    Graph g = *this;
    for (Vertex v : failed) {
      check_vertex(v);
      g.alive_[v - 1] = false;
    }
    for (Vertex v = 1; v <= order(); ++v) {
      auto& list = g.adj_[v - 1];
      if (!g.alive_[v - 1]) {
        list.clear();
        continue;
      }
      std::erase_if(list, [&](Vertex w) { return !g.alive_[w - 1]; });
    }
    return g;
  }

  void check_vertex(Vertex v) const {
    if (!in_range(v)) {
      throw DomainError("vertex " + std::to_string(v) + " outside 1.." +
                        std::to_string(order()));
    }
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::size_t order) : adj_(order), alive_(order, true) {}

  bool in_range(Vertex v) const { return v >= 1 && v <= order(); }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<bool> alive_;
};

inline Graph from_matrix(const PascalMatrix& pm) {
  std::vector<Edge> edges;
  const auto n = static_cast<Vertex>(pm.order());
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      if (pm.at(i, j)) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

inline Graph pascal_graph(std::size_t n, const Limits& limits = {}) {
  return from_matrix(generate(n, limits));
}

// Hop counts from src, indexed by vertex - 1; kUnreachable for vertices that
// cannot be reached or have failed.
inline std::vector<Hops> bfs_distances(const Graph& g, Vertex src) {
  g.check_vertex(src);
  if (!g.alive(src)) {
    throw DomainError("BFS source " + std::to_string(src) + " has failed");
  }
  std::vector<Hops> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{src};
  dist[src - 1] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w - 1] == kUnreachable) {
        dist[w - 1] = dist[u - 1] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Longest shortest path among live vertices; kUnreachable if disconnected.
inline Hops diameter(const Graph& g) {
  const auto live = g.live_vertices();
  if (live.empty()) throw DomainError("diameter of a graph with no live vertices");
  Hops best = 0;
  for (Vertex s : live) {
    const auto dist = bfs_distances(g, s);
    for (Vertex t : live) {
      if (dist[t - 1] == kUnreachable) return kUnreachable;
      best = std::max(best, dist[t - 1]);
    }
  }
  return best;
}

inline bool is_connected(const Graph& g) {
  const auto live = g.live_vertices();
  if (live.empty()) return true;
  const auto dist = bfs_distances(g, live.front());
  return std::none_of(live.begin(), live.end(),
                      [&](Vertex v) { return dist[v - 1] == kUnreachable; });
}

namespace detail {

inline void require_order(const Graph& g, std::size_t min_order, const char* what) {
  if (g.order() < min_order) {
    throw DomainError(std::string(what) + " needs order >= " +
                      std::to_string(min_order) + ", got " +
                      std::to_string(g.order()));
  }
}

inline std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Each finder below returns a counterexample description, or nothing when
// the property holds.

inline std::optional<std::string> find_cut_vertex(const Graph& g) {
  for (Vertex v = 1; v <= g.order(); ++v) {
    const Vertex gone[] = {v};
    if (!is_connected(g.without(gone))) {
      return "removing v" + std::to_string(v) + " disconnects the graph";
    }
  }
  if (!is_connected(g)) return std::string("graph is disconnected");
  return std::nullopt;
}

inline std::optional<std::string> find_missing_hub_edge(const Graph& g) {
  for (Vertex v = 2; v <= g.order(); ++v) {
    if (!g.has_edge(1, v)) return "v1 not adjacent to v" + std::to_string(v);
  }
  return std::nullopt;
}

inline std::optional<std::string> find_missing_consecutive_edge(const Graph& g,
                                                                Vertex from) {
  for (Vertex v = from; v < g.order(); ++v) {
    if (!g.has_edge(v, v + 1)) return "missing edge " + pair_text(v, v + 1);
  }
  return std::nullopt;
}

inline std::optional<std::string> find_missing_hamiltonian_edge(const Graph& g) {
  if (auto w = find_missing_consecutive_edge(g, 1)) return w;
  const auto n = static_cast<Vertex>(g.order());
  if (!g.has_edge(n, 1)) return "missing closing edge " + pair_text(n, 1);
  return std::nullopt;
}

inline std::optional<std::string> find_missing_wheel_edge(const Graph& g) {
  if (auto w = find_missing_hub_edge(g)) return w;
  return find_missing_consecutive_edge(g, 2);
}

inline std::optional<std::string> find_even_edge(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (e.u % 2 == 0 && e.v % 2 == 0) {
      return "edge " + pair_text(e.u, e.v) + " joins two even vertices";
    }
  }
  return std::nullopt;
}

// Paths of length <= 2 between u and v are the direct edge and u-w-v for each
// common neighbour w. Distinct such paths never share an edge.
inline std::size_t short_path_count(const Graph& g, Vertex u, Vertex v) {
  std::size_t count = g.has_edge(u, v) ? 1 : 0;
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

inline std::optional<std::string> find_pair_without_two_short_paths(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      const auto count = short_path_count(g, u, v);
      if (count < 2) {
        return "pair " + pair_text(u, v) + " has " + std::to_string(count) +
               " edge-disjoint path(s) of length <= 2";
      }
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> find_even_neighbor_violation(const Graph& g) {
  // i is the larger endpoint; with i < j the claim already fails on PG(8)
  // through the edge (3,8).
  for (const Edge& e : g.edges()) {
    const Vertex i = e.v, j = e.u;
    if (j % 2 != 0 || i - j <= 1) continue;
    if (i % 2 == 0) {
      return "edge " + pair_text(j, i) + " has even endpoint v" + std::to_string(i);
    }
    if (!g.has_edge(i, j - 1)) {
      return "edge " + pair_text(j, i) + " present but " + pair_text(j - 1, i) + " missing";
    }
  }
  return std::nullopt;
}

inline unsigned power_hub_exponent(const Graph& g, Vertex k) {
  const Vertex below = k - 1;
  if (k < 3 || !std::has_single_bit(below)) {
    throw DomainError("vertex " + std::to_string(k) + " is not of the form 2^m+1, m >= 1");
  }
  if (k > g.order()) {
    throw DomainError("vertex " + std::to_string(k) + " exceeds order " +
                      std::to_string(g.order()));
  }
  return static_cast<unsigned>(std::countr_zero(below));
}

inline std::optional<std::string> find_hub_gap(const Graph& g, Vertex k, Vertex last) {
  for (Vertex v = 1; v <= last; ++v) {
    if (v != k && !g.has_edge(k, v)) {
      return "v" + std::to_string(k) + " not adjacent to v" + std::to_string(v);
    }
  }
  return std::nullopt;
}

inline Vertex power_hub_reach(const Graph& g, Vertex k) {
  const unsigned m = power_hub_exponent(g, k);
  const std::uint64_t window = (std::uint64_t{1} << (m + 1)) + 1;
  return static_cast<Vertex>(std::min<std::uint64_t>(g.order(), window));
}

}  // namespace detail

// Every vertex survives the deletion of any single other vertex.
inline bool is_biconnected(const Graph& g) {
  detail::require_order(g, 3, "is_biconnected");
  return !detail::find_cut_vertex(g);
}

// The specific circuit 1, 2, ..., n, 1.
inline bool has_sequential_hamiltonian(const Graph& g) {
  detail::require_order(g, 3, "has_sequential_hamiltonian");
  return !detail::find_missing_hamiltonian_edge(g);
}

inline bool check_star(const Graph& g) { return !detail::find_missing_hub_edge(g); }

// Hub v1 plus the rim path v2-v3-...-vn; only the rim edge (2, n) may be absent.
inline bool check_wheel_minus_edge(const Graph& g) {
  detail::require_order(g, 4, "check_wheel_minus_edge");
  return !detail::find_missing_wheel_edge(g);
}

inline bool check_even_independence(const Graph& g) { return !detail::find_even_edge(g); }

inline bool check_two_edge_disjoint_short_paths(const Graph& g) {
  detail::require_order(g, 3, "check_two_edge_disjoint_short_paths");
  return !detail::find_pair_without_two_short_paths(g);
}

inline bool check_even_neighbor_parity(const Graph& g) {
  return !detail::find_even_neighbor_violation(g);
}

// For k = 2^m + 1: v_k is adjacent to every other vertex up to index
// min(order, 2^(m+1) + 1).
inline bool check_power_hub(const Graph& g, Vertex k) {
  return !detail::find_hub_gap(g, k, detail::power_hub_reach(g, k));
}

// The same claim without the index window: v_k adjacent to every vertex.
// Fails on PG(n) once n > 2^(m+1) + 1.
inline bool check_power_hub_unbounded(const Graph& g, Vertex k) {
  detail::power_hub_exponent(g, k);
  return !detail::find_hub_gap(g, k, static_cast<Vertex>(g.order()));
}

}  // namespace pascalnet
