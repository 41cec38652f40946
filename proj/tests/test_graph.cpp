#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>

#include "pascalnet/graph.hpp"
#include "test_support.hpp"

using namespace pascalnet;
using pascalnet::testing::floyd_warshall;
using pascalnet::testing::make_graph;

TEST(FromMatrix, Pg5Edges) {
  const auto g = pascal_graph(5);
  const std::vector<Edge> expected = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
                                      {2, 5}, {3, 4}, {3, 5}, {4, 5}};
  EXPECT_EQ(g.edges(), expected);
}

TEST(FromMatrix, SingleVertexAndPg6) {
  const auto g1 = pascal_graph(1);
  EXPECT_EQ(g1.order(), 1u);
  EXPECT_EQ(g1.edge_count(), 0u);
  const auto g6 = pascal_graph(6);
  EXPECT_EQ(std::vector<Vertex>(g6.neighbors(6).begin(), g6.neighbors(6).end()),
            (std::vector<Vertex>{1, 5}));
}

TEST(FromMatrix, DegreeSumAndSymmetry) {
  for (std::size_t n = 1; n <= 200; ++n) {
    const auto pm = generate(n);
    const auto g = from_matrix(pm);
    std::size_t degree_sum = 0;
    for (Vertex v = 1; v <= n; ++v) {
      degree_sum += g.degree(v);
      ASSERT_FALSE(g.has_edge(v, v));
      for (Vertex w : g.neighbors(v)) ASSERT_TRUE(g.has_edge(w, v));
    }
    ASSERT_EQ(degree_sum, 2 * edge_count(pm)) << n;
    if (n >= 2) {
      ASSERT_EQ(g.degree(1), n - 1);
    }
  }
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(make_graph(3, {{1, 1}}), DomainError);
  EXPECT_THROW(make_graph(3, {{1, 4}}), DomainError);
  EXPECT_THROW(make_graph(3, {{0, 2}}), DomainError);
}

TEST(Bfs, Examples) {
  const auto g = pascal_graph(5);
  EXPECT_EQ(bfs_distances(g, 1), (std::vector<Hops>{0, 1, 1, 1, 1}));
  EXPECT_EQ(bfs_distances(g, 2), (std::vector<Hops>{1, 0, 1, 2, 1}));
  const Vertex gone[] = {1};
  const auto d = bfs_distances(g.without(gone), 3);
  EXPECT_EQ(d[0], kUnreachable);
  EXPECT_EQ(d[1], 1u);
  EXPECT_EQ(d[3], 1u);
  EXPECT_EQ(d[4], 1u);
  EXPECT_THROW(bfs_distances(g, 6), DomainError);
  EXPECT_THROW(bfs_distances(g.without(gone), 1), DomainError);
}

TEST(Bfs, MatchesFloydWarshallAndIsAMetric) {
  for (std::size_t n : {3u, 7u, 12u, 17u, 33u, 50u}) {
    for (const auto& removed : std::vector<std::vector<Vertex>>{{}, {1}, {1, 2}, {1, 9}}) {
      if (!removed.empty() && removed.back() > n) continue;
      const auto g = pascal_graph(n).without(removed);
      const auto oracle = floyd_warshall(g);
      for (Vertex s : g.live_vertices()) {
        const auto d = bfs_distances(g, s);
        for (Vertex t = 1; t <= n; ++t) {
          ASSERT_EQ(d[t - 1], oracle[s - 1][t - 1]) << n << " " << s << "->" << t;
          ASSERT_EQ(d[t - 1], oracle[t - 1][s - 1]);
        }
      }
      for (Vertex a : g.live_vertices())
        for (Vertex b : g.live_vertices())
          for (Vertex c : g.live_vertices()) {
            const auto ab = oracle[a - 1][b - 1], bc = oracle[b - 1][c - 1];
            if (ab != kUnreachable && bc != kUnreachable) {
              ASSERT_LE(oracle[a - 1][c - 1], ab + bc);
            }
          }
    }
  }
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(pascal_graph(3)), 1u);
  EXPECT_EQ(diameter(pascal_graph(5)), 2u);
  EXPECT_EQ(diameter(pascal_graph(64)), 2u);
  EXPECT_EQ(diameter(pascal_graph(1)), 0u);
  EXPECT_EQ(diameter(make_graph(4, {{1, 2}, {3, 4}})), kUnreachable);
  EXPECT_EQ(diameter(make_graph(4, {{1, 2}, {2, 3}, {3, 4}})), 3u);
}

TEST(Diameter, AtMostTwoUpTo256) {
  for (std::size_t n = 3; n <= 256; ++n) {
    const auto d = diameter(pascal_graph(n));
    ASSERT_EQ(d, n == 3 ? 1u : 2u) << n;
  }
}

TEST(Biconnected, Examples) {
  EXPECT_TRUE(is_biconnected(pascal_graph(3)));
  EXPECT_TRUE(is_biconnected(pascal_graph(5)));
  EXPECT_FALSE(is_biconnected(make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}})));
  EXPECT_FALSE(is_biconnected(make_graph(4, {{1, 2}, {3, 4}, {2, 3}})));
  EXPECT_THROW(is_biconnected(pascal_graph(2)), DomainError);
}

TEST(Biconnected, AgreesWithBoostArticulationPoints) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  pascalnet::testing::Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng.below(8);
    const auto g = pascalnet::testing::random_graph(rng, n, 0.25 + 0.5 * rng.unit());
    BGraph bg(n);
    for (const Edge& e : g.edges()) boost::add_edge(e.u - 1, e.v - 1, bg);
    std::vector<std::size_t> cut;
    boost::articulation_points(bg, std::back_inserter(cut));
    const bool oracle = cut.empty() && is_connected(g);
    ASSERT_EQ(is_biconnected(g), oracle) << "trial " << trial;
  }
}

TEST(Hamiltonian, Examples) {
  EXPECT_TRUE(has_sequential_hamiltonian(pascal_graph(5)));
  EXPECT_TRUE(has_sequential_hamiltonian(pascal_graph(4)));
  EXPECT_FALSE(has_sequential_hamiltonian(make_graph(3, {{1, 2}, {2, 3}})));
  EXPECT_THROW(has_sequential_hamiltonian(pascal_graph(2)), DomainError);
}

TEST(Star, Examples) {
  EXPECT_TRUE(check_star(pascal_graph(5)));
  EXPECT_TRUE(check_star(pascal_graph(2)));
  auto edges = pascal_graph(5).edges();
  std::erase(edges, Edge{1, 4});
  EXPECT_FALSE(check_star(Graph::from_edges(5, edges)));
}

TEST(WheelMinusEdge, Examples) {
  EXPECT_TRUE(check_wheel_minus_edge(pascal_graph(5)));
  EXPECT_TRUE(check_wheel_minus_edge(pascal_graph(6)));
  EXPECT_FALSE(check_wheel_minus_edge(make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}})));
  EXPECT_THROW(check_wheel_minus_edge(pascal_graph(3)), DomainError);
}

TEST(EvenIndependence, Examples) {
  EXPECT_TRUE(check_even_independence(pascal_graph(5)));
  EXPECT_TRUE(check_even_independence(pascal_graph(64)));
  EXPECT_FALSE(check_even_independence(make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {2, 4}})));
}

TEST(TwoShortPaths, Examples) {
  const auto g = pascal_graph(5);
  EXPECT_EQ(detail::short_path_count(g, 2, 4), 3u);  // 2-1-4, 2-3-4, 2-5-4
  EXPECT_TRUE(check_two_edge_disjoint_short_paths(g));
  EXPECT_TRUE(check_two_edge_disjoint_short_paths(pascal_graph(3)));
  EXPECT_FALSE(check_two_edge_disjoint_short_paths(make_graph(3, {{1, 2}, {2, 3}})));
  EXPECT_THROW(check_two_edge_disjoint_short_paths(pascal_graph(2)), DomainError);
}

// Brute force: enumerate every path of length <= 2 as an edge set and search
// for two with no common edge.
TEST(TwoShortPaths, AgreesWithPathEnumeration) {
  pascalnet::testing::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng.below(6);
    const auto g = pascalnet::testing::random_graph(rng, n, 0.6);
    bool oracle = true;
    for (Vertex u = 1; u <= n && oracle; ++u) {
      for (Vertex v = u + 1; v <= n && oracle; ++v) {
        std::vector<std::vector<Edge>> paths;
        if (g.has_edge(u, v)) paths.push_back({{u, v}});
        for (Vertex w = 1; w <= n; ++w) {
          if (w != u && w != v && g.has_edge(u, w) && g.has_edge(w, v)) {
            paths.push_back({{std::min(u, w), std::max(u, w)}, {std::min(w, v), std::max(w, v)}});
          }
        }
        bool found = false;
        for (std::size_t a = 0; a < paths.size() && !found; ++a)
          for (std::size_t b = a + 1; b < paths.size() && !found; ++b) {
            bool shared = false;
            for (const auto& x : paths[a])
              for (const auto& y : paths[b]) shared = shared || x == y;
            found = !shared;
          }
        oracle = found;
      }
    }
    ASSERT_EQ(check_two_edge_disjoint_short_paths(g), oracle) << trial;
  }
}

TEST(EvenNeighborParity, Examples) {
  EXPECT_TRUE(check_even_neighbor_parity(pascal_graph(5)));
  EXPECT_TRUE(check_even_neighbor_parity(pascal_graph(17)));
  EXPECT_FALSE(check_even_neighbor_parity(make_graph(4, {{2, 4}})));
  // Odd larger endpoint but the companion edge (1, 5) is missing.
  EXPECT_FALSE(check_even_neighbor_parity(make_graph(5, {{2, 5}})));
  // Read with i the smaller endpoint the claim fails on PG(8).
  const auto g8 = pascal_graph(8);
  EXPECT_TRUE(g8.has_edge(3, 8));
  EXPECT_FALSE(g8.has_edge(3, 7));
  EXPECT_TRUE(check_even_neighbor_parity(g8));
}

TEST(PowerHub, Examples) {
  const auto g8 = pascal_graph(8);
  EXPECT_TRUE(check_power_hub(g8, 5));
  EXPECT_EQ(g8.degree(5), 7u);

  const auto g10 = pascal_graph(10);
  EXPECT_TRUE(check_power_hub(g10, 5));
  EXPECT_FALSE(check_power_hub_unbounded(g10, 5));
  EXPECT_FALSE(g10.has_edge(5, 10));

  EXPECT_TRUE(check_power_hub(pascal_graph(9), 9));
  EXPECT_THROW(check_power_hub(g10, 4), DomainError);
  EXPECT_THROW(check_power_hub(g10, 2), DomainError);
  EXPECT_THROW(check_power_hub(g8, 9), DomainError);
}

TEST(PowerHub, BoundedFormHoldsUnboundedFailsPastWindow) {
  for (std::size_t n = 3; n <= 200; ++n) {
    const auto g = pascal_graph(n);
    for (Vertex k = 3; k <= n; k = 2 * k - 1) {
      ASSERT_TRUE(check_power_hub(g, k)) << n << " " << k;
      ASSERT_EQ(check_power_hub_unbounded(g, k), n <= 2 * k - 1) << n << " " << k;
    }
  }
}

TEST(Properties, HoldOnPascalGraphsUpTo128) {
  for (std::size_t n = 3; n <= 128; ++n) {
    const auto g = pascal_graph(n);
    ASSERT_TRUE(check_star(g)) << n;
    ASSERT_TRUE(has_sequential_hamiltonian(g)) << n;
    if (n >= 4) {
      ASSERT_TRUE(check_wheel_minus_edge(g)) << n;
    }
    ASSERT_TRUE(is_biconnected(g)) << n;
    ASSERT_TRUE(check_even_independence(g)) << n;
    ASSERT_TRUE(check_two_edge_disjoint_short_paths(g)) << n;
    ASSERT_TRUE(check_even_neighbor_parity(g)) << n;
  }
}
