#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "steiner_ecc/error.hpp"

namespace steiner_ecc {

using Vertex = std::size_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable labeled tree on vertices 0..n-1.
///
/// All-pairs distances are computed eagerly at construction (n BFS passes),
/// so every query afterwards is a const read and the object can be shared
/// freely between threads.
class Tree {
 public:
  /// Single-vertex tree.
  Tree() : adj_(1), dist_(1, 0) {}

  /// Validates `edges` on the vertex range 0..order-1.
  Tree(std::size_t order, std::span<const Edge> edges) {
    if (order == 0) {
      throw Error(ErrorCode::BadVertexIds, "a tree needs at least one vertex");
    }
    adj_.assign(order, {});
    std::vector<Vertex> parent(order);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const Edge& e : edges) {
      if (e.u >= order || e.v >= order) {
        throw Error(ErrorCode::BadVertexIds,
                    "edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ") outside 0.." +
                        std::to_string(order - 1));
      }
      const Vertex a = find(e.u);
      const Vertex b = find(e.v);
      if (a == b) {
        throw Error(ErrorCode::HasCycle,
                    "edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ") closes a cycle");
      }
      parent[a] = b;
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    if (edges.size() != order - 1) {
      throw Error(ErrorCode::NotConnected,
                  std::to_string(edges.size()) + " edges on " +
                      std::to_string(order) + " vertices");
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
    compute_distances();
  }

  std::size_t order() const noexcept { return adj_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& list = adj_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
  }

  std::size_t distance(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return dist_[u * order() + v];
  }

  /// Distances from v to every vertex, indexed by vertex id.
  std::span<const std::uint32_t> distance_row(Vertex v) const {
    check_vertex(v);
    return {dist_.data() + v * order(), order()};
  }

  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(order() - 1);
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v >= order()) {
      throw Error(ErrorCode::BadVertexIds,
                  "vertex " + std::to_string(v) + " not in tree of order " +
                      std::to_string(order()));
    }
  }

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.adj_ == b.adj_;
  }

 private:
  void compute_distances() {
    const std::size_t n = order();
    constexpr auto unseen = std::numeric_limits<std::uint32_t>::max();
    dist_.assign(n * n, unseen);
    std::vector<Vertex> queue(n);
    for (Vertex s = 0; s < n; ++s) {
      std::uint32_t* row = &dist_[s * n];
      row[s] = 0;
      std::size_t head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        const Vertex x = queue[head++];
        for (Vertex y : adj_[x]) {
          if (row[y] == unseen) {
            row[y] = row[x] + 1;
            queue[tail++] = y;
          }
        }
      }
    }
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint32_t> dist_;
};

/// Builds a tree from an edge list; the order is one more than the largest
/// id, and every id in between must occur. An empty list is the
/// single-vertex tree.
inline Tree from_edge_list(std::span<const Edge> edges) {
  if (edges.empty()) return Tree{};
  Vertex max_id = 0;
  for (const Edge& e : edges) max_id = std::max({max_id, e.u, e.v});
  const std::size_t n = max_id + 1;
  std::vector<bool> seen(n, false);
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorCode::HasCycle,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    seen[e.u] = seen[e.v] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) {
      throw Error(ErrorCode::BadVertexIds,
                  "vertex ids are not contiguous: " + std::to_string(v) +
                      " is missing");
    }
  }
  return Tree(n, edges);
}

inline Tree from_edge_list(std::initializer_list<Edge> edges) {
  return from_edge_list(std::span<const Edge>(edges.begin(), edges.size()));
}

/// Standard Prüfer decode; a code of length L yields a tree on L+2 vertices.
inline Tree from_prufer(std::span<const Vertex> code) {
  const std::size_t n = code.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) {
    if (c >= n) {
      throw Error(ErrorCode::BadCode, "entry " + std::to_string(c) +
                                          " out of range 0.." +
                                          std::to_string(n - 1));
    }
    ++degree[c];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, c});
    if (--degree[c] == 1) leaves.push(c);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  const Vertex b = leaves.top();
  edges.push_back({a, b});
  return Tree(n, edges);
}

inline std::vector<Vertex> to_prufer(const Tree& t) {
  const std::size_t n = t.order();
  if (n < 2) throw Error(ErrorCode::TooSmall, "Prüfer codes need n >= 2");
  std::vector<std::size_t> degree(n);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<bool> removed(n, false);
  std::vector<Vertex> code;
  code.reserve(n - 2);
  while (code.size() + 2 < n) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    removed[leaf] = true;
    for (Vertex w : t.neighbors(leaf)) {
      if (removed[w]) continue;
      code.push_back(w);
      if (--degree[w] == 1) leaves.push(w);
    }
  }
  return code;
}

// ---------------------------------------------------------------------------
// Paths

/// Sequence of distinct vertices, consecutive ones adjacent in the host tree.
class PathInTree {
 public:
  PathInTree(const Tree& t, std::vector<Vertex> vertices)
      : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw Error(ErrorCode::InvalidPath, "empty path");
    std::vector<bool> used(t.order(), false);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const Vertex v = vertices_[i];
      if (v >= t.order()) {
        throw Error(ErrorCode::InvalidPath,
                    "vertex " + std::to_string(v) + " not in tree");
      }
      if (used[v]) {
        throw Error(ErrorCode::InvalidPath,
                    "vertex " + std::to_string(v) + " repeated");
      }
      used[v] = true;
      if (i > 0 && !t.adjacent(vertices_[i - 1], v)) {
        throw Error(ErrorCode::InvalidPath,
                    std::to_string(vertices_[i - 1]) + " and " +
                        std::to_string(v) + " are not adjacent");
      }
    }
  }

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t length() const noexcept { return vertices_.size() - 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  Vertex operator[](std::size_t i) const { return vertices_.at(i); }

  PathInTree reversed() const {
    PathInTree p = *this;
    std::reverse(p.vertices_.begin(), p.vertices_.end());
    return p;
  }

  friend bool operator==(const PathInTree&, const PathInTree&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// The unique u-v path, starting at u.
inline std::vector<Vertex> path_vertices(const Tree& t, Vertex u, Vertex v) {
  std::vector<Vertex> out{u};
  Vertex cur = u;
  while (cur != v) {
    const std::size_t remaining = t.distance(cur, v);
    for (Vertex w : t.neighbors(cur)) {
      if (t.distance(w, v) + 1 == remaining) {
        cur = w;
        break;
      }
    }
    out.push_back(cur);
  }
  return out;
}

inline PathInTree tree_path(const Tree& t, Vertex u, Vertex v) {
  return PathInTree(t, path_vertices(t, u, v));
}

// ---------------------------------------------------------------------------
// Classical eccentricity

inline std::size_t eccentricity(const Tree& t, Vertex v) {
  std::size_t best = 0;
  for (Vertex w = 0; w < t.order(); ++w) best = std::max(best, t.distance(v, w));
  return best;
}

inline std::size_t diameter(const Tree& t) {
  std::size_t best = 0;
  for (Vertex v = 0; v < t.order(); ++v) best = std::max(best, eccentricity(t, v));
  return best;
}

inline std::size_t radius(const Tree& t) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < t.order(); ++v) best = std::min(best, eccentricity(t, v));
  return best;
}

/// Among all diametrical paths, the lexicographically smallest vertex
/// sequence once each is oriented from its smaller endpoint.
inline PathInTree diametric_path(const Tree& t) {
  const std::size_t d = diameter(t);
  std::vector<Vertex> best;
  for (Vertex u = 0; u < t.order(); ++u) {
    if (!best.empty() && best.front() < u) break;
    for (Vertex v = u; v < t.order(); ++v) {
      if (t.distance(u, v) != d) continue;
      auto candidate = path_vertices(t, u, v);
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
  }
  return PathInTree(t, std::move(best));
}

inline std::size_t distance_to_path(const Tree& t, Vertex u,
                                    const PathInTree& p) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex x : p.vertices()) best = std::min(best, t.distance(u, x));
  return best;
}

inline std::size_t path_eccentricity(const Tree& t, const PathInTree& p) {
  std::size_t best = 0;
  for (Vertex u = 0; u < t.order(); ++u) {
    best = std::max(best, distance_to_path(t, u, p));
  }
  return best;
}

/// Central vertices (one or two), found by peeling leaves.
inline std::vector<Vertex> center(const Tree& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : t.neighbors(leaf)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// ---------------------------------------------------------------------------
// Degree and segment sequences

/// Non-increasing degrees summing to 2(n-1). The single-vertex tree is
/// represented as (0).
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<std::size_t> values)
      : values_(std::move(values)) {
    const std::size_t n = values_.size();
    if (n == 0) throw Error(ErrorCode::InfeasibleSequence, "empty sequence");
    if (!std::is_sorted(values_.rbegin(), values_.rend())) {
      throw Error(ErrorCode::InfeasibleSequence, "not non-increasing: " + str());
    }
    const std::size_t sum =
        std::accumulate(values_.begin(), values_.end(), std::size_t{0});
    if (sum != 2 * (n - 1)) {
      throw Error(ErrorCode::InfeasibleSequence,
                  str() + " sums to " + std::to_string(sum) + ", expected " +
                      std::to_string(2 * (n - 1)));
    }
    if (n >= 2 && values_.back() == 0) {
      throw Error(ErrorCode::InfeasibleSequence, "zero degree in " + str());
    }
  }

  const std::vector<std::size_t>& values() const noexcept { return values_; }
  std::size_t order() const noexcept { return values_.size(); }
  std::size_t max_degree() const { return values_.front(); }
  std::size_t operator[](std::size_t i) const { return values_.at(i); }

  /// Number of entries >= 2.
  std::size_t internal_count() const {
    return static_cast<std::size_t>(
        std::count_if(values_.begin(), values_.end(),
                      [](std::size_t d) { return d >= 2; }));
  }

  std::size_t count_of(std::size_t degree) const {
    return static_cast<std::size_t>(
        std::count(values_.begin(), values_.end(), degree));
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(values_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<std::size_t> values_;
};

/// Non-increasing positive segment lengths; sums to n-1 of the host tree.
class SegmentSequence {
 public:
  SegmentSequence() = default;
  explicit SegmentSequence(std::vector<std::size_t> values)
      : values_(std::move(values)) {
    if (values_.empty()) throw Error(ErrorCode::Infeasible, "no segments");
    if (!std::is_sorted(values_.rbegin(), values_.rend()) ||
        values_.back() == 0) {
      throw Error(ErrorCode::Infeasible,
                  "segment lengths must be positive and non-increasing: " +
                      str());
    }
  }

  const std::vector<std::size_t>& values() const noexcept { return values_; }
  std::size_t count() const noexcept { return values_.size(); }
  std::size_t total() const {
    return std::accumulate(values_.begin(), values_.end(), std::size_t{0});
  }
  std::size_t operator[](std::size_t i) const { return values_.at(i); }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(values_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const SegmentSequence&, const SegmentSequence&) = default;
  friend auto operator<=>(const SegmentSequence&, const SegmentSequence&) = default;

 private:
  std::vector<std::size_t> values_;
};

inline DegreeSequence degree_sequence(const Tree& t) {
  std::vector<std::size_t> d(t.order());
  for (Vertex v = 0; v < t.order(); ++v) d[v] = t.degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return DegreeSequence(std::move(d));
}

/// Maximal paths whose inner vertices have degree 2 and whose ends do not,
/// each oriented from its smaller end id, sorted by vertex sequence.
inline std::vector<PathInTree> segments(const Tree& t) {
  if (t.order() < 2) throw Error(ErrorCode::TooSmall, "segments need n >= 2");
  std::vector<PathInTree> out;
  for (Vertex start = 0; start < t.order(); ++start) {
    if (t.degree(start) == 2) continue;
    for (Vertex first : t.neighbors(start)) {
      std::vector<Vertex> walk{start, first};
      while (t.degree(walk.back()) == 2) {
        const auto nb = t.neighbors(walk.back());
        walk.push_back(nb[0] == walk[walk.size() - 2] ? nb[1] : nb[0]);
      }
      if (walk.front() < walk.back()) out.emplace_back(t, std::move(walk));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.vertices() < b.vertices();
  });
  return out;
}

inline SegmentSequence segment_sequence(const Tree& t) {
  std::vector<std::size_t> lengths;
  for (const auto& s : segments(t)) lengths.push_back(s.length());
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return SegmentSequence(std::move(lengths));
}

// ---------------------------------------------------------------------------
// Structural predicates

inline std::vector<Vertex> branch_vertices(const Tree& t) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) >= 3) out.push_back(v);
  }
  return out;
}

inline bool is_path(const Tree& t) {
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) > 2) return false;
  }
  return true;
}

/// Deleting all leaves leaves a path (or nothing).
inline bool is_caterpillar(const Tree& t) {
  if (t.order() <= 2) return true;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) < 2) continue;
    std::size_t internal_neighbors = 0;
    for (Vertex w : t.neighbors(v)) internal_neighbors += t.degree(w) >= 2;
    if (internal_neighbors > 2) return false;
  }
  return true;
}

/// At most one branch vertex; paths count as degenerate generalized stars.
inline bool is_generalized_star(const Tree& t) {
  return branch_vertices(t).size() <= 1;
}

}  // namespace steiner_ecc
