#pragma once

// Vertex-failure analysis for Pascal graphs: removal, hub routing through v1
// or a surviving dependable node, and exact hop statistics.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "pascalnet/dnp.hpp"
#include "pascalnet/error.hpp"
#include "pascalnet/graph.hpp"

namespace pascalnet {

// Non-negative fraction kept in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational of(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw DomainError("zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    return {g ? num / g : 0, g ? den / g : 1};
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<=(const Rational& a, std::uint64_t b) {
    return static_cast<unsigned __int128>(a.num) <= static_cast<unsigned __int128>(b) * a.den;
  }
};

inline Graph remove_vertices(const Graph& g, std::span<const Vertex> failed) {
  for (Vertex v : failed) g.check_vertex(v);
  std::vector<bool> gone(g.order() + 1, false);
  for (Vertex v : failed) gone[v] = true;
  bool any_left = false;
  for (Vertex v : g.live_vertices()) any_left = any_left || !gone[v];
  if (!any_left) throw DomainError("cannot remove every vertex");
  return g.without(failed);
}

// Live vertices adjacent to every other live vertex, ascending.
inline std::vector<Vertex> live_hubs(const Graph& g) {
  const std::size_t live = g.live_count();
  std::vector<Vertex> out;
  for (Vertex v : g.live_vertices()) {
    if (g.degree(v) + 1 == live) out.push_back(v);
  }
  return out;
}

// Direct edge if present; otherwise through the lowest-index hub adjacent to
// both ends; otherwise a BFS shortest path.
inline std::vector<Vertex> hub_route(const Graph& g, Vertex src, Vertex dst,
                                     std::span<const Vertex> hubs) {
  for (Vertex v : {src, dst}) {
    g.check_vertex(v);
    if (!g.alive(v)) throw DomainError("vertex " + std::to_string(v) + " has failed");
  }
  if (src == dst) throw DomainError("route endpoints must differ");
  if (g.has_edge(src, dst)) return {src, dst};

  std::vector<Vertex> sorted(hubs.begin(), hubs.end());
  std::sort(sorted.begin(), sorted.end());
  for (Vertex h : sorted) {
    if (h != src && h != dst && g.alive(h) && g.has_edge(src, h) && g.has_edge(h, dst)) {
      return {src, h, dst};
    }
  }

  std::vector<Vertex> parent(g.order() + 1, 0);
  std::deque<Vertex> queue{src};
  parent[src] = src;
  while (!queue.empty() && parent[dst] == 0) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (parent[w] == 0) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  if (parent[dst] == 0) {
    throw UnreachableError("no path from v" + std::to_string(src) + " to v" +
                           std::to_string(dst));
  }
  std::vector<Vertex> path{dst};
  for (Vertex v = dst; v != src; v = parent[v]) path.push_back(parent[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Mean BFS distance over unordered live pairs; 0 when fewer than two vertices
// are alive.
inline Rational avg_path_length(const Graph& g) {
  const auto live = g.live_vertices();
  std::uint64_t total = 0, pairs = 0;
  for (Vertex s : live) {
    const auto dist = bfs_distances(g, s);
    for (Vertex t : live) {
      if (t <= s) continue;
      if (dist[t - 1] == kUnreachable) {
        throw UnreachableError("graph is disconnected: v" + std::to_string(s) + " cannot reach v" +
                               std::to_string(t));
      }
      total += dist[t - 1];
      ++pairs;
    }
  }
  return pairs == 0 ? Rational{} : Rational::of(total, pairs);
}

// Lowest full-degree survivor of PG(n) once v1 fails.
inline std::optional<Vertex> restoring_hub(std::uint64_t n, const Limits& limits = {}) {
  if (n < 4) throw DomainError("v1 fallback needs n >= 4, got " + std::to_string(n));
  const Vertex gone[] = {1};
  const auto hubs = live_hubs(remove_vertices(pascal_graph(n, limits), gone));
  if (hubs.empty()) return std::nullopt;
  return hubs.front();
}

// True iff PG(n) without v1 still has diameter at most 2.
inline bool dnp_fallback_check(std::uint64_t n, const Limits& limits = {}) {
  if (n < 4) throw DomainError("v1 fallback needs n >= 4, got " + std::to_string(n));
  const Vertex gone[] = {1};
  return diameter(remove_vertices(pascal_graph(n, limits), gone)) <= 2;
}

struct ResilienceReport {
  std::uint32_t trial = 0;
  std::vector<Vertex> failed;  // original indices, ascending
  bool connected = false;
  Hops diameter_after = 0;  // kUnreachable when disconnected
  Rational avg_hops;        // over reachable unordered pairs
  std::map<Hops, std::uint64_t> hop_histogram;  // distance -> unordered pairs
  std::optional<Vertex> hub_used;

  friend bool operator==(const ResilienceReport&, const ResilienceReport&) = default;
};

// All-pairs statistics of the surviving graph.
inline ResilienceReport analyze_survivors(const Graph& g) {
  ResilienceReport r;
  const auto live = g.live_vertices();
  std::uint64_t total = 0, pairs = 0;
  bool connected = true;
  Hops longest = 0;
  for (Vertex s : live) {
    const auto dist = bfs_distances(g, s);
    for (Vertex t : live) {
      if (t <= s) continue;
      if (dist[t - 1] == kUnreachable) {
        connected = false;
        continue;
      }
      ++r.hop_histogram[dist[t - 1]];
      total += dist[t - 1];
      ++pairs;
      longest = std::max(longest, dist[t - 1]);
    }
  }
  r.connected = connected;
  r.diameter_after = connected ? longest : kUnreachable;
  r.avg_hops = pairs == 0 ? Rational{} : Rational::of(total, pairs);
  const auto hubs = live_hubs(g);
  if (!hubs.empty()) r.hub_used = hubs.front();
  return r;
}

// Per-trial generator: mt19937_64 seeded through a SplitMix64 mix of
// (seed, trial), so every trial owns an independent, reproducible stream.
class TrialStream {
 public:
  TrialStream(std::uint64_t seed, std::uint64_t trial)
      : engine_(splitmix64(splitmix64(seed) ^ splitmix64(trial + 0x632be59bd9b4e019ULL))) {}

  // Uniform in [0, bound) by rejection, independent of library distributions.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

struct FailureScenario {
  std::uint32_t n = 0;
  std::uint32_t failures = 0;
  std::uint32_t trials = 1;
  std::uint64_t seed = 0;
  // Always failed; the remaining failures - forced.size() are drawn at random.
  std::vector<Vertex> forced_failed;
};

inline void validate(const FailureScenario& s) {
  if (s.n < 1) throw DomainError("scenario order must be at least 1");
  if (s.failures >= s.n) {
    throw DomainError("failure count " + std::to_string(s.failures) + " must be below n = " +
                      std::to_string(s.n));
  }
  if (s.trials < 1) throw DomainError("scenario needs at least one trial");
  std::vector<Vertex> forced = s.forced_failed;
  std::sort(forced.begin(), forced.end());
  if (std::adjacent_find(forced.begin(), forced.end()) != forced.end()) {
    throw DomainError("forced failure set has duplicates");
  }
  for (Vertex v : forced) {
    if (v < 1 || v > s.n) {
      throw DomainError("forced failure v" + std::to_string(v) + " outside 1.." +
                        std::to_string(s.n));
    }
  }
  if (forced.size() > s.failures) {
    throw DomainError("forced failure set larger than failure count");
  }
}

// Failed set for one trial: the forced vertices plus a uniform sample without
// replacement (partial Fisher-Yates) from the rest.
inline std::vector<Vertex> draw_failures(const FailureScenario& s, std::uint32_t trial) {
  std::vector<Vertex> failed = s.forced_failed;
  std::vector<Vertex> pool;
  for (Vertex v = 1; v <= s.n; ++v) {
    if (std::find(failed.begin(), failed.end(), v) == failed.end()) pool.push_back(v);
  }
  TrialStream stream(s.seed, trial);
  const std::size_t extra = s.failures - failed.size();
  for (std::size_t i = 0; i < extra; ++i) {
    const std::size_t j = i + stream.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
    failed.push_back(pool[i]);
  }
  std::sort(failed.begin(), failed.end());
  return failed;
}

inline std::vector<ResilienceReport> failure_sweep(const FailureScenario& scenario,
                                                   unsigned threads = 1,
                                                   const Limits& limits = {}) {
  validate(scenario);
  const Graph base = pascal_graph(scenario.n, limits);
  std::vector<ResilienceReport> reports(scenario.trials);
  auto run = [&](std::uint32_t trial) {
    const auto failed = draw_failures(scenario, trial);
    ResilienceReport r = analyze_survivors(remove_vertices(base, failed));
    r.trial = trial;
    r.failed = failed;
    reports[trial] = std::move(r);
  };
  threads = std::max(1u, std::min<unsigned>(threads, scenario.trials));
  if (threads == 1) {
    for (std::uint32_t t = 0; t < scenario.trials; ++t) run(t);
    return reports;
  }
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (std::uint32_t t = w; t < scenario.trials; t += threads) run(t);
    });
  }
  workers.clear();
  return reports;
}

}  // namespace pascalnet
