#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "steiner_ecc/error.hpp"
#include "steiner_ecc/rational.hpp"
#include "steiner_ecc/tree.hpp"

namespace steiner_ecc {

/// Sorted, duplicate-free, nonempty set of vertex ids of a host tree.
class VertexSet {
 public:
  VertexSet(const Tree& t, std::vector<Vertex> ids) : ids_(std::move(ids)) {
    if (ids_.empty()) throw Error(ErrorCode::EmptySet, "vertex set is empty");
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    for (Vertex v : ids_) t.check_vertex(v);
  }

  const std::vector<Vertex>& ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }

 private:
  std::vector<Vertex> ids_;
};

/// Largest order for which the subset-enumeration oracle will run.
inline constexpr std::size_t kBruteforceMaxOrder = 20;

/// Edge count of the minimal subtree spanning `s`: an edge belongs to it
/// exactly when both of its sides contain a vertex of `s`.
inline std::size_t steiner_distance(const Tree& t, const VertexSet& s) {
  const std::size_t n = t.order();
  const Vertex root = s.ids().front();
  std::vector<bool> marked(n, false);
  for (Vertex v : s.ids()) marked[v] = true;

  constexpr Vertex none = static_cast<Vertex>(-1);
  std::vector<Vertex> parent(n, none), order;
  order.reserve(n);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t.neighbors(order[i])) {
      if (parent[w] == none) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<bool> below(n, false);
  std::size_t edges = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (marked[v]) below[v] = true;
    if (v == root) continue;
    if (below[v]) {
      ++edges;
      below[parent[v]] = true;
    }
  }
  return edges;
}

inline std::size_t steiner_distance(const Tree& t, std::vector<Vertex> ids) {
  return steiner_distance(t, VertexSet(t, std::move(ids)));
}

/// (d(u,v) + d(u,w) + d(v,w)) / 2 for three (not necessarily distinct)
/// vertices.
inline std::size_t steiner3_halfperimeter(const Tree& t, Vertex u, Vertex v,
                                          Vertex w) {
  return (t.distance(u, v) + t.distance(u, w) + t.distance(v, w)) / 2;
}

/// Exhaustive maximum of the Steiner distance over every k-subset that
/// contains v. Ground truth for the faster routes; refuses orders above
/// kBruteforceMaxOrder.
inline std::size_t ecc_k_bruteforce(const Tree& t, Vertex v, std::size_t k) {
  const std::size_t n = t.order();
  t.check_vertex(v);
  if (k < 2 || k > n) {
    throw Error(ErrorCode::BadK, "k=" + std::to_string(k) +
                                     " outside 2.." + std::to_string(n));
  }
  if (n > kBruteforceMaxOrder) {
    throw Error(ErrorCode::CapExceeded,
                "brute-force oracle limited to n <= " +
                    std::to_string(kBruteforceMaxOrder));
  }
  std::vector<Vertex> others;
  for (Vertex w = 0; w < n; ++w) {
    if (w != v) others.push_back(w);
  }
  const std::size_t pick = k - 1;
  // Lexicographic walk over index combinations of `others`.
  std::vector<std::size_t> idx(pick);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::size_t best = 0;
  std::vector<Vertex> set(k);
  while (true) {
    set[0] = v;
    for (std::size_t i = 0; i < pick; ++i) set[i + 1] = others[idx[i]];
    best = std::max(best, steiner_distance(t, VertexSet(t, set)));
    std::size_t i = pick;
    while (i > 0 && idx[i - 1] == others.size() - pick + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

/// ecc3(v) as the maximum half-perimeter over all pairs {x, y}.
inline std::size_t ecc3_fast(const Tree& t, Vertex v) {
  const std::size_t n = t.order();
  if (n < 3) throw Error(ErrorCode::TooSmall, "ecc3 needs n >= 3");
  t.check_vertex(v);
  const auto from_v = t.distance_row(v);
  std::uint32_t best = 0;
  for (Vertex x = 0; x < n; ++x) {
    const auto from_x = t.distance_row(x);
    const std::uint32_t vx = from_v[x];
    for (Vertex y = x + 1; y < n; ++y) {
      best = std::max(best, vx + from_v[y] + from_x[y]);
    }
  }
  return best / 2;
}

/// ecc3(v) as (length of a longest path P from v) + ecc(P), maximized over
/// every farthest endpoint so ties between longest paths do not matter.
inline std::size_t ecc3_via_lemma(const Tree& t, Vertex v) {
  if (t.order() < 3) throw Error(ErrorCode::TooSmall, "ecc3 needs n >= 3");
  const std::size_t reach = eccentricity(t, v);
  std::size_t best = 0;
  for (Vertex x = 0; x < t.order(); ++x) {
    if (t.distance(v, x) != reach) continue;
    best = std::max(best, reach + path_eccentricity(t, tree_path(t, v, x)));
  }
  return best;
}

inline std::vector<std::size_t> ecc3_all(const Tree& t) {
  std::vector<std::size_t> out(t.order());
  for (Vertex v = 0; v < t.order(); ++v) out[v] = ecc3_fast(t, v);
  return out;
}

/// Exact mean of ecc3 over all vertices.
inline Rational aecc3(const Tree& t) {
  const auto values = ecc3_all(t);
  const auto sum = std::accumulate(values.begin(), values.end(), std::size_t{0});
  return Rational(static_cast<std::int64_t>(sum),
                  static_cast<std::int64_t>(t.order()));
}

/// Exact mean of ecc_k. k = 2 and k = 3 use the closed forms; larger k go
/// through the brute-force oracle.
inline Rational aecc_k(const Tree& t, std::size_t k) {
  const std::size_t n = t.order();
  if (k < 2 || k > n) {
    throw Error(ErrorCode::BadK, "k=" + std::to_string(k) +
                                     " outside 2.." + std::to_string(n));
  }
  if (k == 3) return aecc3(t);
  std::size_t sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    sum += k == 2 ? eccentricity(t, v) : ecc_k_bruteforce(t, v, k);
  }
  return Rational(static_cast<std::int64_t>(sum), static_cast<std::int64_t>(n));
}

}  // namespace steiner_ecc
