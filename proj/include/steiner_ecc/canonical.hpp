#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "steiner_ecc/tree.hpp"

namespace steiner_ecc {

/// Byte-comparable isomorphism key: equal keys iff isomorphic trees.
using CanonicalKey = std::string;

namespace detail {

// AHU encoding of the subtree hanging from `root`: "(" + sorted child codes
// + ")". Iterative post-order so deep paths do not grow the call stack.
inline std::string ahu_encode(const Tree& t, Vertex root) {
  const std::size_t n = t.order();
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
  std::vector<std::vector<std::string>> child_codes(n);
  std::string code;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    auto& kids = child_codes[v];
    std::sort(kids.begin(), kids.end());
    code = "(";
    for (auto& k : kids) code += k;
    code += ")";
    kids.clear();
    kids.shrink_to_fit();
    if (v != root) child_codes[parent[v]].push_back(std::move(code));
  }
  return code;
}

}  // namespace detail

/// Rooted at the center; with two central vertices both rootings are
/// encoded and the lexicographically smaller one is kept.
inline CanonicalKey canonical_form(const Tree& t) {
  CanonicalKey best;
  for (Vertex c : center(t)) {
    auto code = detail::ahu_encode(t, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

inline bool is_isomorphic(const Tree& a, const Tree& b) {
  if (a.order() != b.order()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

/// Relabels `t` so that vertex v becomes perm[v].
inline Tree relabel(const Tree& t, const std::vector<Vertex>& perm) {
  if (t.order() == 1) return t;
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) edges.push_back({perm.at(e.u), perm.at(e.v)});
  return Tree(t.order(), edges);
}

}  // namespace steiner_ecc
