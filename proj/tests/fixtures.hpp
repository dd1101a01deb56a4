#pragma once

// Hand-built trees with fixed labelings, independent of the constructors
// under test.

#include <vector>

#include "steiner_ecc/tree.hpp"

namespace fixtures {

using steiner_ecc::Edge;
using steiner_ecc::Tree;
using steiner_ecc::Vertex;

inline Tree path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return n == 1 ? Tree{} : Tree(n, edges);
}

/// K_{1,3}, center 0.
inline Tree claw() { return steiner_ecc::from_edge_list({{0, 1}, {0, 2}, {0, 3}}); }

/// Spider with center 0 and legs of the given lengths, laid out leg by leg.
inline Tree spider(std::vector<std::size_t> legs) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t len : legs) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return steiner_ecc::from_edge_list(edges);
}

/// S(2,2,2): legs 0-1-2, 0-3-4, 0-5-6.
inline Tree s222() { return spider({2, 2, 2}); }

/// Two degree-3 vertices 0 and 2 joined through 1, leaves 3,4 on 0 and 5,6
/// on 2.
inline Tree h_tree() {
  return steiner_ecc::from_edge_list({{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}});
}

/// Spine 0-1-2-3-4 with degrees 5,5,3,3,3 and eleven leaves.
inline Tree figure_one_caterpillar() {
  const std::vector<std::size_t> spine_degree{5, 5, 3, 3, 3};
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < 5; ++i) edges.push_back({i, i + 1});
  Vertex next = 5;
  for (Vertex i = 0; i < 5; ++i) {
    const std::size_t spine_nbrs = (i == 0 || i == 4) ? 1 : 2;
    for (std::size_t j = spine_nbrs; j < spine_degree[i]; ++j) edges.push_back({i, next++});
  }
  return steiner_ecc::from_edge_list(edges);
}

}  // namespace fixtures
