#pragma once

// Planarity by incremental path addition (Demoucron, Malgrange, Pertuiset).
//
// The graph is split into biconnected blocks; a graph is planar iff every
// block is. Each block starts from an embedded cycle and repeatedly embeds a
// path from one fragment into a face that contains all of that fragment's
// attachment vertices. A fragment with no such face proves non-planarity.
// Each round is O(n + m) and there are at most m rounds.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pascalnet/graph.hpp"

namespace pascalnet {

namespace planarity_detail {

using Local = std::uint32_t;
using AdjList = std::vector<std::vector<Local>>;

struct Block {
  AdjList adj;
  std::size_t edges = 0;
};

inline std::uint64_t edge_key(Local a, Local b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

// Biconnected blocks of the live part of g (Hopcroft-Tarjan edge stack).
inline std::vector<Block> biconnected_blocks(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> disc(n + 1, 0), low(n + 1, 0);
  std::uint32_t timer = 0;
  std::vector<Edge> stack;
  std::vector<Block> blocks;

  auto emit = [&](Edge until) {
    std::vector<Edge> block_edges;
    while (true) {
      Edge e = stack.back();
      stack.pop_back();
      block_edges.push_back(e);
      if (e == until) break;
    }
    std::vector<Vertex> verts;
    for (const Edge& e : block_edges) {
      verts.push_back(e.u);
      verts.push_back(e.v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto local = [&](Vertex v) {
      return static_cast<Local>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    Block b;
    b.adj.resize(verts.size());
    for (const Edge& e : block_edges) {
      b.adj[local(e.u)].push_back(local(e.v));
      b.adj[local(e.v)].push_back(local(e.u));
    }
    b.edges = block_edges.size();
    blocks.push_back(std::move(b));
  };

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = ++timer;
    for (Vertex w : g.neighbors(u)) {
      if (disc[w] == 0) {
        stack.push_back({u, w});
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) emit({u, w});
      } else if (w != parent && disc[w] < disc[u]) {
        stack.push_back({u, w});
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };

  for (Vertex v : g.live_vertices()) {
    if (disc[v] == 0) dfs(v, 0);
  }
  return blocks;
}

// A cycle through vertex 0: the edge (0, w) closed by a path from w back to
// 0 that avoids that edge. Exists because the block is biconnected.
inline std::vector<Local> initial_cycle(const AdjList& adj) {
  const Local start = 0;
  const Local first = adj[start].front();
  std::vector<Local> parent(adj.size(), static_cast<Local>(-1));
  std::deque<Local> queue{first};
  parent[first] = first;
  while (!queue.empty()) {
    const Local u = queue.front();
    queue.pop_front();
    if (u == start) break;
    for (Local w : adj[u]) {
      if (u == first && w == start) continue;
      if (parent[w] == static_cast<Local>(-1)) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  std::vector<Local> cycle;
  for (Local v = start; v != first; v = parent[v]) cycle.push_back(v);
  cycle.push_back(first);
  return cycle;
}

struct Fragment {
  std::vector<Local> attachments;  // sorted
  std::vector<Local> path;         // endpoints are two distinct attachments
};

inline bool block_is_planar(const Block& block) {
  const std::size_t n = block.adj.size();
  if (n < 5) return true;
  if (block.edges > 3 * n - 6) return false;

  std::vector<bool> embedded(n, false);
  std::unordered_set<std::uint64_t> placed;
  std::vector<std::vector<Local>> faces;

  const auto cycle = initial_cycle(block.adj);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    embedded[cycle[i]] = true;
    placed.insert(edge_key(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  faces.push_back(cycle);
  faces.push_back(cycle);

  while (placed.size() < block.edges) {
    std::vector<Fragment> fragments;

    // Single edges between two embedded vertices.
    for (Local u = 0; u < n; ++u) {
      if (!embedded[u]) continue;
      for (Local w : block.adj[u]) {
        if (u < w && embedded[w] && !placed.contains(edge_key(u, w))) {
          fragments.push_back({{u, w}, {u, w}});
        }
      }
    }

    // Components of the unembedded vertices with their attachment edges.
    std::vector<std::int64_t> component(n, -1);
    std::int64_t next_id = 0;
    for (Local s = 0; s < n; ++s) {
      if (embedded[s] || component[s] >= 0) continue;
      std::vector<Local> members{s};
      component[s] = next_id;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (Local w : block.adj[members[i]]) {
          if (!embedded[w] && component[w] < 0) {
            component[w] = next_id;
            members.push_back(w);
          }
        }
      }
      Fragment frag;
      for (Local m : members) {
        for (Local w : block.adj[m]) {
          if (embedded[w]) frag.attachments.push_back(w);
        }
      }
      std::sort(frag.attachments.begin(), frag.attachments.end());
      frag.attachments.erase(std::unique(frag.attachments.begin(), frag.attachments.end()),
                             frag.attachments.end());

      // Path from the first attachment through the component to another one.
      const Local from = frag.attachments.front();
      std::vector<Local> parent(n, static_cast<Local>(-1));
      std::deque<Local> queue;
      for (Local w : block.adj[from]) {
        if (component[w] == next_id && parent[w] == static_cast<Local>(-1)) {
          parent[w] = from;
          queue.push_back(w);
        }
      }
      Local meet = 0, to = 0;
      bool found = false;
      while (!queue.empty() && !found) {
        const Local u = queue.front();
        queue.pop_front();
        for (Local w : block.adj[u]) {
          if (embedded[w] && w != from) {
            meet = u;
            to = w;
            found = true;
            break;
          }
          if (component[w] == next_id && parent[w] == static_cast<Local>(-1)) {
            parent[w] = u;
            queue.push_back(w);
          }
        }
      }
      if (!found) return false;  // unreachable for a biconnected block
      std::vector<Local> path{to};
      for (Local v = meet; v != from; v = parent[v]) path.push_back(v);
      path.push_back(from);
      std::reverse(path.begin(), path.end());
      frag.path = std::move(path);
      fragments.push_back(std::move(frag));
      ++next_id;
    }

    // Faces whose boundary holds every attachment of the fragment.
    std::vector<std::vector<Local>> sorted_faces;
    sorted_faces.reserve(faces.size());
    for (const auto& f : faces) {
      auto s = f;
      std::sort(s.begin(), s.end());
      sorted_faces.push_back(std::move(s));
    }
    std::size_t chosen = fragments.size();
    std::size_t chosen_face = 0;
    for (std::size_t i = 0; i < fragments.size(); ++i) {
      std::size_t admissible = 0, first_face = 0;
      for (std::size_t f = 0; f < faces.size(); ++f) {
        if (std::includes(sorted_faces[f].begin(), sorted_faces[f].end(),
                          fragments[i].attachments.begin(),
                          fragments[i].attachments.end())) {
          if (admissible++ == 0) first_face = f;
        }
      }
      if (admissible == 0) return false;
      if (admissible == 1 || chosen == fragments.size()) {
        chosen = i;
        chosen_face = first_face;
        // A fragment with a single admissible face must go there now.
        if (admissible == 1) break;
      }
    }

    // Split the face along the path a -> ... -> b.
    const auto& path = fragments[chosen].path;
    const Local a = path.front();
    const Local b = path.back();
    const auto face = faces[chosen_face];
    const std::size_t len = face.size();
    const std::size_t ia = static_cast<std::size_t>(std::find(face.begin(), face.end(), a) - face.begin());
    const std::size_t ib = static_cast<std::size_t>(std::find(face.begin(), face.end(), b) - face.begin());

    std::vector<Local> left, right;
    for (std::size_t i = ia;; i = (i + 1) % len) {
      left.push_back(face[i]);
      if (i == ib) break;
    }
    for (std::size_t i = path.size() - 2; i >= 1; --i) left.push_back(path[i]);
    for (std::size_t i = ib;; i = (i + 1) % len) {
      right.push_back(face[i]);
      if (i == ia) break;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) right.push_back(path[i]);

    faces[chosen_face] = std::move(left);
    faces.push_back(std::move(right));
    for (std::size_t i = 0; i < path.size(); ++i) {
      embedded[path[i]] = true;
      if (i + 1 < path.size()) placed.insert(edge_key(path[i], path[i + 1]));
    }
  }
  return true;
}

}  // namespace planarity_detail

inline bool is_planar(const Graph& g) {
  const std::size_t n = g.live_count();
  if (n >= 3 && g.edge_count() > 3 * n - 6) return false;
  for (const auto& block : planarity_detail::biconnected_blocks(g)) {
    if (!planarity_detail::block_is_planar(block)) return false;
  }
  return true;
}

}  // namespace pascalnet
