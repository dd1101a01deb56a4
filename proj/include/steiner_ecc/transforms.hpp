#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "steiner_ecc/error.hpp"
#include "steiner_ecc/rational.hpp"
#include "steiner_ecc/steiner.hpp"
#include "steiner_ecc/tree.hpp"

namespace steiner_ecc {

enum class TransformKind { Sigma, Pi, Rebalance };

inline std::string_view to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::Sigma: return "sigma";
    case TransformKind::Pi: return "pi";
    case TransformKind::Rebalance: return "rebalance";
  }
  return "unknown";
}

/// One applied move. Both trees are kept so callers can re-audit.
struct TransformOutcome {
  TransformKind kind;
  Tree before;
  Tree after;
  std::string site;
  Rational aecc3_before;
  Rational aecc3_after;

  Rational delta() const { return aecc3_after - aecc3_before; }
};

namespace detail {

inline std::string join_path(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += "-";
    s += std::to_string(vs[i]);
  }
  return s;
}

/// Vertices of the component containing `root` once the edge
/// root-`blocked` is removed.
inline std::vector<Vertex> component_without_edge(const Tree& t, Vertex root,
                                                  Vertex blocked) {
  std::vector<bool> seen(t.order(), false);
  seen[root] = seen[blocked] = true;
  std::vector<Vertex> out{root};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Vertex w : t.neighbors(out[i])) {
      if (out[i] == root && w == blocked) continue;
      if (!seen[w]) {
        seen[w] = true;
        out.push_back(w);
      }
    }
  }
  return out;
}

inline std::size_t eccentricity_within(const Tree& t, Vertex root,
                                       const std::vector<Vertex>& part) {
  std::size_t best = 0;
  for (Vertex x : part) best = std::max(best, t.distance(root, x));
  return best;
}

/// Re-attaches every neighbor of `from` other than `keep` to `to`.
inline Tree move_branches(const Tree& t, Vertex from, Vertex keep, Vertex to) {
  std::vector<Edge> edges;
  edges.reserve(t.order() - 1);
  for (const Edge& e : t.edges()) {
    if (e.u == from && e.v != keep) {
      edges.push_back({to, e.v});
    } else if (e.v == from && e.u != keep) {
      edges.push_back({to, e.u});
    } else {
      edges.push_back(e);
    }
  }
  return Tree(t.order(), edges);
}

inline TransformOutcome make_outcome(TransformKind kind, const Tree& before,
                                     Tree after, std::string site) {
  auto a_before = aecc3(before);
  auto a_after = aecc3(after);
  return TransformOutcome{kind,    before, std::move(after), std::move(site),
                          a_before, a_after};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// sigma

/// A non-pendant edge v_k y hanging off a diametrical path v_0..v_d, with
/// the path oriented so that k <= floor(d/2). The subtree X behind y
/// (y excluded) is what the move relocates to v_d.
struct SigmaSite {
  PathInTree diametric_path;
  std::size_t attach_index;
  Vertex off_path_vertex;

  Vertex attach_vertex() const { return diametric_path[attach_index]; }
  Vertex receiver() const { return diametric_path.back(); }
  Vertex moved_subtree_root() const { return off_path_vertex; }

  std::string describe() const {
    return "path " + detail::join_path(diametric_path.vertices()) +
           ", k=" + std::to_string(attach_index) +
           ", y=" + std::to_string(off_path_vertex) + " -> v_d=" +
           std::to_string(receiver());
  }
};

/// Every sigma site on the tree's canonical diametrical path, ordered by
/// attachment position along the unoriented path, then by y.
inline std::vector<SigmaSite> find_sigma_sites(const Tree& t) {
  std::vector<SigmaSite> out;
  if (t.order() < 4) return out;
  const PathInTree path = diametric_path(t);
  const std::size_t d = path.length();
  std::vector<bool> on_path(t.order(), false);
  for (Vertex v : path.vertices()) on_path[v] = true;
  for (std::size_t i = 1; i + 1 <= d; ++i) {
    for (Vertex y : t.neighbors(path[i])) {
      if (on_path[y] || t.degree(y) < 2) continue;
      if (i <= d / 2) {
        out.push_back({path, i, y});
      } else {
        out.push_back({path.reversed(), d - i, y});
      }
    }
  }
  return out;
}

inline void validate_sigma_site(const Tree& t, const SigmaSite& site) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidSite, "sigma site " + why);
  };
  std::optional<PathInTree> path;
  try {
    path.emplace(t, site.diametric_path.vertices());
  } catch (const Error&) {
    fail("path is not a path of this tree");
  }
  const std::size_t d = path->length();
  if (d != diameter(t)) fail("path is not diametrical");
  if (site.attach_index < 1 || site.attach_index > d / 2) {
    fail("attach index " + std::to_string(site.attach_index) +
         " outside 1..floor(d/2)");
  }
  const Vertex y = site.off_path_vertex;
  if (y >= t.order() || !t.adjacent(path->vertices()[site.attach_index], y)) {
    fail("y is not adjacent to v_k");
  }
  const auto& vs = path->vertices();
  if (std::find(vs.begin(), vs.end(), y) != vs.end()) fail("y lies on the path");
  if (t.degree(y) < 2) fail("v_k y is a pendant edge");
}

/// Moves every edge (y, w), w in X, to (v_d, w). Degree sequence is kept:
/// y becomes a leaf and v_d takes over y's degree.
inline TransformOutcome sigma_transform(const Tree& t, const SigmaSite& site) {
  validate_sigma_site(t, site);
  Tree after = detail::move_branches(t, site.off_path_vertex,
                                     site.attach_vertex(), site.receiver());
  return detail::make_outcome(TransformKind::Sigma, t, std::move(after),
                              site.describe());
}

/// Applies sigma moves until none remain. Each step uses the site with
/// the smallest y on the current tree's canonical diametrical path.
inline std::vector<TransformOutcome> reduce_to_caterpillar(const Tree& t) {
  std::vector<TransformOutcome> chain;
  Tree cur = t;
  while (true) {
    auto sites = find_sigma_sites(cur);
    if (sites.empty()) break;
    const auto pick = std::min_element(
        sites.begin(), sites.end(), [](const auto& a, const auto& b) {
          return a.off_path_vertex < b.off_path_vertex;
        });
    chain.push_back(sigma_transform(cur, *pick));
    cur = chain.back().after;
  }
  return chain;
}

// ---------------------------------------------------------------------------
// pi

/// A path whose inner vertices all have degree 2, oriented from the donor
/// end u to the receiver end v, where ecc_X(u) <= ecc_Y(v) for the
/// components X, Y of u, v in T - E(path).
struct PiSite {
  PathInTree path;

  Vertex donor() const { return path.front(); }
  Vertex receiver() const { return path.back(); }

  std::string describe() const {
    return "path " + detail::join_path(path.vertices()) + ", donor u=" +
           std::to_string(donor()) + " -> receiver v=" +
           std::to_string(receiver());
  }
};

namespace detail {

struct PiSides {
  std::size_t donor_ecc;
  std::size_t receiver_ecc;
};

inline PiSides pi_sides(const Tree& t, const PathInTree& p) {
  const auto& vs = p.vertices();
  const Vertex u = vs.front(), v = vs.back();
  const auto x = component_without_edge(t, u, vs[1]);
  const auto y = component_without_edge(t, v, vs[vs.size() - 2]);
  return {eccentricity_within(t, u, x), eccentricity_within(t, v, y)};
}

inline void check_pi_path(const Tree& t, const PathInTree& p) {
  if (p.length() < 1) {
    throw Error(ErrorCode::InvalidSite, "pi path needs at least one edge");
  }
  const auto& vs = p.vertices();
  for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
    if (t.degree(vs[i]) != 2) {
      throw Error(ErrorCode::InvalidSite,
                  "inner vertex " + std::to_string(vs[i]) +
                      " does not have degree 2");
    }
  }
}

}  // namespace detail

/// Orients a degree-2-interior path into a pi site: the end whose
/// component is shallower donates; on a tie the smaller id donates.
inline PiSite make_pi_site(const Tree& t, const PathInTree& path) {
  PathInTree p(t, path.vertices());
  detail::check_pi_path(t, p);
  const auto sides = detail::pi_sides(t, p);
  const bool flip =
      sides.donor_ecc > sides.receiver_ecc ||
      (sides.donor_ecc == sides.receiver_ecc && p.back() < p.front());
  return PiSite{flip ? p.reversed() : p};
}

/// All pi sites, one per unordered degree-2-interior path, ordered by the
/// path's vertex sequence taken from its smaller end.
inline std::vector<PiSite> find_pi_sites(const Tree& t) {
  std::vector<std::vector<Vertex>> paths;
  for (Vertex u = 0; u < t.order(); ++u) {
    for (Vertex first : t.neighbors(u)) {
      std::vector<Vertex> walk{u, first};
      while (true) {
        if (walk.front() < walk.back()) paths.push_back(walk);
        if (t.degree(walk.back()) != 2) break;
        const auto nb = t.neighbors(walk.back());
        walk.push_back(nb[0] == walk[walk.size() - 2] ? nb[1] : nb[0]);
      }
    }
  }
  std::sort(paths.begin(), paths.end());
  std::vector<PiSite> out;
  out.reserve(paths.size());
  for (auto& vs : paths) out.push_back(make_pi_site(t, PathInTree(t, vs)));
  return out;
}

/// Moves every edge (u, w), w in N_X(u), to (v, w).
inline TransformOutcome pi_transform(const Tree& t, const PiSite& site) {
  std::optional<PathInTree> p;
  try {
    p.emplace(t, site.path.vertices());
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidSite, e.what());
  }
  detail::check_pi_path(t, *p);
  const auto sides = detail::pi_sides(t, *p);
  if (sides.receiver_ecc < sides.donor_ecc) {
    throw Error(ErrorCode::InvalidSite,
                "receiver side is shallower than donor side (" +
                    std::to_string(sides.receiver_ecc) + " < " +
                    std::to_string(sides.donor_ecc) + ")");
  }
  Tree after =
      detail::move_branches(t, site.donor(), p->vertices()[1], site.receiver());
  return detail::make_outcome(TransformKind::Pi, t, std::move(after),
                              site.describe());
}

/// Repeated pi moves along segments joining two branch vertices until at
/// most one branch vertex is left. Segment sequence is invariant.
inline std::vector<TransformOutcome> reduce_to_generalized_star(const Tree& t) {
  std::vector<TransformOutcome> chain;
  if (t.order() < 3) return chain;
  Tree cur = t;
  while (branch_vertices(cur).size() >= 2) {
    std::optional<PathInTree> inner;
    for (const auto& seg : segments(cur)) {
      if (cur.degree(seg.front()) >= 3 && cur.degree(seg.back()) >= 3) {
        inner = seg;
        break;
      }
    }
    chain.push_back(pi_transform(cur, make_pi_site(cur, *inner)));
    cur = chain.back().after;
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Leg rebalancing on generalized stars

/// A leg of a generalized star: center, ..., tip.
struct Leg {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size() - 1; }
  Vertex tip() const { return vertices.back(); }
};

/// Legs of a generalized star with exactly one branch vertex, in order of
/// the center's neighbors.
inline std::vector<Leg> star_legs(const Tree& t) {
  const auto branches = branch_vertices(t);
  if (branches.size() != 1) {
    throw Error(ErrorCode::NotGeneralizedStar,
                std::to_string(branches.size()) + " branch vertices");
  }
  const Vertex c = branches.front();
  std::vector<Leg> legs;
  for (Vertex first : t.neighbors(c)) {
    Leg leg{{c, first}};
    while (t.degree(leg.tip()) == 2) {
      const auto nb = t.neighbors(leg.tip());
      const Vertex prev = leg.vertices[leg.vertices.size() - 2];
      leg.vertices.push_back(nb[0] == prev ? nb[1] : nb[0]);
    }
    legs.push_back(std::move(leg));
  }
  return legs;
}

/// Moves the tip of the longest leg onto the tip of the shortest leg.
/// Ties pick the leg with the smallest tip id.
inline TransformOutcome rebalance_step(const Tree& t) {
  if (!is_generalized_star(t)) {
    throw Error(ErrorCode::NotGeneralizedStar,
                std::to_string(branch_vertices(t).size()) +
                    " branch vertices");
  }
  if (is_path(t)) {
    throw Error(ErrorCode::AlreadyBalanced, "a path is a one-segment star");
  }
  const auto legs = star_legs(t);
  auto longer = [](const Leg& a, const Leg& b) {
    return a.length() != b.length() ? a.length() > b.length() : a.tip() < b.tip();
  };
  auto shorter = [](const Leg& a, const Leg& b) {
    return a.length() != b.length() ? a.length() < b.length() : a.tip() < b.tip();
  };
  const Leg& longest = *std::min_element(legs.begin(), legs.end(), longer);
  const Leg& shortest = *std::min_element(legs.begin(), legs.end(), shorter);
  if (longest.length() - shortest.length() <= 1) {
    throw Error(ErrorCode::AlreadyBalanced,
                "leg lengths differ by at most one");
  }
  const Vertex tip = longest.tip();
  const Vertex before_tip = longest.vertices[longest.vertices.size() - 2];
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) {
    if ((e.u == tip && e.v == before_tip) || (e.v == tip && e.u == before_tip)) {
      edges.push_back({shortest.tip(), tip});
    } else {
      edges.push_back(e);
    }
  }
  std::string site = "move tip " + std::to_string(tip) + " of leg length " +
                     std::to_string(longest.length()) + " onto tip " +
                     std::to_string(shortest.tip()) + " of leg length " +
                     std::to_string(shortest.length());
  return detail::make_outcome(TransformKind::Rebalance, t,
                              Tree(t.order(), edges), std::move(site));
}

inline std::vector<TransformOutcome> balance_generalized_star(const Tree& t) {
  if (!is_generalized_star(t)) {
    throw Error(ErrorCode::NotGeneralizedStar,
                std::to_string(branch_vertices(t).size()) +
                    " branch vertices");
  }
  std::vector<TransformOutcome> chain;
  Tree cur = t;
  while (true) {
    try {
      chain.push_back(rebalance_step(cur));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::AlreadyBalanced) break;
      throw;
    }
    cur = chain.back().after;
  }
  return chain;
}

}  // namespace steiner_ecc
