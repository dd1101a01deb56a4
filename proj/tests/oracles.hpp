#pragma once

// Test-only reference computations. Nothing here calls into the library's
// distance, Steiner, or eccentricity code paths.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <vector>

#include "steiner_ecc/canonical.hpp"
#include "steiner_ecc/rational.hpp"
#include "steiner_ecc/tree.hpp"

namespace oracle {

using steiner_ecc::Edge;
using steiner_ecc::Vertex;

using Adjacency = std::vector<std::vector<Vertex>>;

inline Adjacency adjacency(std::size_t n, const std::vector<Edge>& edges) {
  Adjacency adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

inline Adjacency adjacency(const steiner_ecc::Tree& t) {
  return adjacency(t.order(), t.edges());
}

inline std::vector<std::size_t> bfs(const Adjacency& adj, Vertex s) {
  std::vector<std::size_t> d(adj.size(), SIZE_MAX);
  std::queue<Vertex> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    const Vertex x = q.front();
    q.pop();
    for (Vertex y : adj[x]) {
      if (d[y] == SIZE_MAX) {
        d[y] = d[x] + 1;
        q.push(y);
      }
    }
  }
  return d;
}

inline std::size_t bfs_eccentricity(const Adjacency& adj, Vertex v) {
  const auto d = bfs(adj, v);
  return *std::max_element(d.begin(), d.end());
}

/// Steiner distance by repeatedly deleting leaves that are not in `s`.
inline std::size_t steiner_by_pruning(const Adjacency& adj, const std::vector<Vertex>& s) {
  const std::size_t n = adj.size();
  std::vector<bool> keep(n, false), alive(n, true);
  for (Vertex v : s) keep[v] = true;
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = adj[v].size();
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] <= 1 && !keep[v]) stack.push_back(v);
  }
  std::size_t left = n;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (!alive[v]) continue;
    alive[v] = false;
    --left;
    for (Vertex w : adj[v]) {
      if (alive[w] && --deg[w] <= 1 && !keep[w]) stack.push_back(w);
    }
  }
  return left - 1;
}

/// ecc3 by pruning every 3-set containing v.
inline std::size_t ecc3_by_pruning(const Adjacency& adj, Vertex v) {
  std::size_t best = 0;
  const std::size_t n = adj.size();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (x == v || y == v) continue;
      best = std::max(best, steiner_by_pruning(adj, {v, x, y}));
    }
  }
  return best;
}

inline steiner_ecc::Rational aecc3_by_pruning(const steiner_ecc::Tree& t) {
  const auto adj = adjacency(t);
  std::int64_t sum = 0;
  for (Vertex v = 0; v < t.order(); ++v) sum += ecc3_by_pruning(adj, v);
  return {sum, static_cast<std::int64_t>(t.order())};
}

/// Number of isomorphism classes among all n^(n-2) labeled trees.
inline std::size_t free_tree_count_by_prufer(std::size_t n) {
  if (n <= 2) return 1;
  std::set<steiner_ecc::CanonicalKey> keys;
  std::vector<Vertex> code(n - 2, 0);
  while (true) {
    keys.insert(steiner_ecc::canonical_form(steiner_ecc::from_prufer(code)));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) break;
  }
  return keys.size();
}

/// Leaf-deletion caterpillar test.
inline bool caterpillar_by_leaf_deletion(const steiner_ecc::Tree& t) {
  const auto adj = adjacency(t);
  std::vector<Vertex> spine;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (adj[v].size() >= 2) spine.push_back(v);
  }
  if (spine.size() <= 1) return true;
  std::size_t ends = 0;
  for (Vertex v : spine) {
    std::size_t deg = 0;
    for (Vertex w : adj[v]) deg += adj[w].size() >= 2;
    if (deg > 2) return false;
    ends += deg == 1;
  }
  return ends == 2;
}

}  // namespace oracle
