// Builds PG(n), finds its dependable nodes, fails v1 and routes around it.
//
//   ./dnp_walkthrough 17

#include <cstdlib>
#include <iostream>

#include "pascalnet/pascalnet.hpp"

int main(int argc, char** argv) {
  using namespace pascalnet;
  const std::uint32_t n = argc > 1 ? static_cast<std::uint32_t>(std::atoi(argv[1])) : 9;
  if (n < 4) {
    std::cerr << "order must be at least 4\n";
    return 2;
  }

  const Graph g = pascal_graph(n);
  std::cout << "PG(" << n << "): " << g.edge_count() << " edges, diameter " << diameter(g)
            << "\n";

  const auto report = dnp_report(n);
  std::cout << display_name(report.label) << ", dependable nodes: "
            << io::dnp_list(report.brute_indices, true) << " (formula "
            << io::dnp_list(report.formula_indices, true) << ")\n";

  const Vertex failed[] = {1};
  const Graph survivors = remove_vertices(g, failed);
  const auto hubs = live_hubs(survivors);
  std::cout << "after v1 fails: diameter " << diameter(survivors) << ", average hops "
            << avg_path_length(survivors).num << "/" << avg_path_length(survivors).den << "\n";

  // v2 and v4 are never adjacent, so this route must use a hub.
  const auto path = hub_route(survivors, 2, 4, hubs);
  std::cout << "route v2 -> v4:";
  for (Vertex v : path) std::cout << " v" << v;
  std::cout << "\n";
}
