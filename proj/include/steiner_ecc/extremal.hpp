#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "steiner_ecc/error.hpp"
#include "steiner_ecc/rational.hpp"
#include "steiner_ecc/tree.hpp"

namespace steiner_ecc {

namespace detail {

inline std::vector<std::size_t> repeat_fill(
    std::initializer_list<std::pair<std::size_t, std::size_t>> runs) {
  std::vector<std::size_t> out;
  for (auto [value, count] : runs) out.insert(out.end(), count, value);
  return out;
}

inline std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Constructors

/// Caterpillar realizing `pi`: the internal vertices form the spine in the
/// given order (or `spine_order`, a permutation of 0..k-1 over the internal
/// entries of pi), spine ends carry d-1 leaves and inner spine vertices
/// d-2. Spine vertices get ids 0..k-1, leaves follow.
inline Tree caterpillar_from_degree_sequence(
    const DegreeSequence& pi,
    std::optional<std::vector<std::size_t>> spine_order = std::nullopt) {
  const std::size_t n = pi.order();
  if (n < 3 || pi.max_degree() < 2) {
    throw Error(ErrorCode::InfeasibleSequence,
                pi.str() + " has no internal vertex");
  }
  const std::size_t k = pi.internal_count();
  std::vector<std::size_t> spine(pi.values().begin(), pi.values().begin() + k);
  if (spine_order) {
    auto check = *spine_order;
    std::sort(check.begin(), check.end());
    std::vector<std::size_t> expect(k);
    std::iota(expect.begin(), expect.end(), std::size_t{0});
    if (check != expect) {
      throw Error(ErrorCode::InfeasibleSequence,
                  "spine order is not a permutation of the internal vertices");
    }
    std::vector<std::size_t> reordered(k);
    for (std::size_t i = 0; i < k; ++i) reordered[i] = spine[(*spine_order)[i]];
    spine = std::move(reordered);
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  Vertex next = k;
  for (Vertex i = 0; i < k; ++i) {
    const std::size_t spine_neighbors = (k == 1) ? 0 : (i == 0 || i == k - 1) ? 1 : 2;
    for (std::size_t j = spine_neighbors; j < spine[i]; ++j) edges.push_back({i, next++});
  }
  return Tree(n, edges);
}

/// S(l_1, ..., l_m): center 0, legs laid out in the given order. One or two
/// legs give a path.
inline Tree generalized_star(const SegmentSequence& legs) {
  const std::size_t n = legs.total() + 1;
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t len : legs.values()) {
    Vertex prev = 0;
    for (std::size_t j = 0; j < len; ++j) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return Tree(n, edges);
}

/// Leg lengths of ST_{n,m}: n-1 split into m parts differing by at most 1.
inline SegmentSequence balanced_legs(std::size_t n, std::size_t m) {
  if (m < 1 || n < 2 || m > n - 1) {
    throw Error(ErrorCode::Infeasible, "balanced star needs 1 <= m <= n-1, got n=" +
                                           std::to_string(n) + ", m=" +
                                           std::to_string(m));
  }
  const std::size_t q = (n - 1) / m, r = (n - 1) % m;
  return SegmentSequence(detail::repeat_fill({{q + 1, r}, {q, m - r}}));
}

inline Tree balanced_star(std::size_t n, std::size_t m) {
  return generalized_star(balanced_legs(n, m));
}

/// pi_Delta = (Delta, 2^(n-Delta-1), 1^Delta).
inline DegreeSequence broom_sequence(std::size_t n, std::size_t delta) {
  if (n < 4 || delta < 3 || delta > n - 1) {
    throw Error(ErrorCode::Infeasible, "broom needs 3 <= Delta <= n-1, got n=" +
                                           std::to_string(n) + ", Delta=" +
                                           std::to_string(delta));
  }
  return DegreeSequence(
      detail::repeat_fill({{delta, 1}, {2, n - delta - 1}, {1, delta}}));
}

/// pi_{k,Delta} = (Delta^k, 2^(n-(Delta-1)k-2), 1^((Delta-2)k+2)).
inline DegreeSequence max_degree_count_sequence(std::size_t n, std::size_t delta,
                                                std::size_t k) {
  if (n <= 3 || k < 1 || delta < 3 || n < 2 + k * (delta - 1)) {
    throw Error(ErrorCode::Infeasible,
                "need n > 3, k >= 1, Delta >= 3, n >= 2 + k(Delta-1); got n=" +
                    std::to_string(n) + ", Delta=" + std::to_string(delta) +
                    ", k=" + std::to_string(k));
  }
  return DegreeSequence(detail::repeat_fill(
      {{delta, k}, {2, n - (delta - 1) * k - 2}, {1, (delta - 2) * k + 2}}));
}

/// pi_k = (3^k, 2^(n-2k-2), 1^(k+2)); requires n >= 2k + 2.
inline DegreeSequence cubic_count_sequence(std::size_t n, std::size_t k) {
  if (n <= 2 || k < 1 || k + 3 > n || n < 2 * k + 2) {
    throw Error(ErrorCode::Infeasible,
                "need 1 <= k <= n-3 and n >= 2k+2; got n=" + std::to_string(n) +
                    ", k=" + std::to_string(k));
  }
  return max_degree_count_sequence(n, 3, k);
}

/// A member of B_{n,Delta}: P_{n-Delta+2} with Delta-2 pendants on one
/// inner vertex.
inline Tree broom(std::size_t n, std::size_t delta) {
  return caterpillar_from_degree_sequence(broom_sequence(n, delta));
}

/// A member of C_n^k.
inline Tree caterpillar_Cnk(std::size_t n, std::size_t k) {
  return caterpillar_from_degree_sequence(cubic_count_sequence(n, k));
}

/// A member of C_{n,Delta}^k.
inline Tree caterpillar_CnDeltak(std::size_t n, std::size_t delta, std::size_t k) {
  return caterpillar_from_degree_sequence(max_degree_count_sequence(n, delta, k));
}

// ---------------------------------------------------------------------------
// Closed forms

/// Maximum aecc3 over trees with degree sequence pi:
/// (nk + 2n - k)/n for d_1 >= 3 (k internal vertices), n - 1 for paths.
inline Rational formula_thm1_bound(const DegreeSequence& pi) {
  const std::size_t n = pi.order();
  if (n < 3) {
    throw Error(ErrorCode::InfeasibleSequence, "bound needs n >= 3, got " + pi.str());
  }
  const auto nn = detail::as_int(n);
  if (pi.max_degree() == 2) return Rational(nn - 1);
  const auto k = detail::as_int(pi.internal_count());
  return Rational(nn * k + 2 * nn - k, nn);
}

enum class Family { Tn, TnDelta, Tnk, TnDeltak };

struct FamilyParams {
  std::size_t n = 0;
  std::size_t delta = 0;
  std::size_t k = 0;
};

/// Maximum aecc3 over the named family.
inline Rational formula_cor_bounds(Family family, const FamilyParams& p) {
  const auto n = detail::as_int(p.n);
  switch (family) {
    case Family::Tn:
      if (p.n < 3) throw Error(ErrorCode::Infeasible, "need n >= 3");
      return Rational(n - 1);
    case Family::TnDelta:
      broom_sequence(p.n, p.delta);
      return Rational((n - 1) * (n - detail::as_int(p.delta)) + 2 * n, n);
    case Family::Tnk:
      cubic_count_sequence(p.n, p.k);
      return Rational((n - 1) * (n - detail::as_int(p.k) - 2) + 2 * n, n);
    case Family::TnDeltak:
      max_degree_count_sequence(p.n, p.delta, p.k);
      return Rational(
          (n - 1) * (n - (detail::as_int(p.delta) - 2) * detail::as_int(p.k) - 2) +
              2 * n,
          n);
  }
  throw Error(ErrorCode::Infeasible, "unknown family");
}

// ---------------------------------------------------------------------------
// Majorization

/// x majorizes y: equal length and total, every prefix sum of x at least
/// the matching prefix sum of y.
inline bool majorizes(const std::vector<std::size_t>& x,
                      const std::vector<std::size_t>& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(x.size()) + " vs " +
                                               std::to_string(y.size()));
  }
  std::size_t sx = 0, sy = 0;
  bool dominated = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    if (sx < sy) dominated = false;
  }
  if (sx != sy) {
    throw Error(ErrorCode::SumMismatch,
                std::to_string(sx) + " vs " + std::to_string(sy));
  }
  return dominated;
}

inline bool majorizes(const DegreeSequence& x, const DegreeSequence& y) {
  return majorizes(x.values(), y.values());
}

struct ExtremalComparison {
  /// bound(pi1) <=> bound(pi2).
  std::strong_ordering bound_order = std::strong_ordering::equal;
  bool first_majorizes = false;
  bool second_majorizes = false;
  /// Internal-vertex counts differ; the majorizing side is then strictly
  /// smaller.
  bool strict_expected = false;
};

/// Compares the caterpillar maxima of two majorization-comparable degree
/// sequences with maximum degree at least 3.
inline ExtremalComparison compare_extremal(const DegreeSequence& pi1,
                                           const DegreeSequence& pi2) {
  if (pi1.max_degree() < 3 || pi2.max_degree() < 3) {
    throw Error(ErrorCode::InfeasibleSequence,
                "both sequences need maximum degree >= 3");
  }
  ExtremalComparison c;
  c.first_majorizes = majorizes(pi1, pi2);
  c.second_majorizes = majorizes(pi2, pi1);
  if (!c.first_majorizes && !c.second_majorizes) {
    throw Error(ErrorCode::Incomparable, pi1.str() + " vs " + pi2.str());
  }
  c.bound_order = formula_thm1_bound(pi1) <=> formula_thm1_bound(pi2);
  c.strict_expected = pi1.internal_count() != pi2.internal_count();
  return c;
}

/// Every tree-feasible degree sequence of order n, in decreasing
/// lexicographic order.
inline std::vector<DegreeSequence> all_degree_sequences(std::size_t n) {
  std::vector<DegreeSequence> out;
  if (n == 1) {
    out.emplace_back(std::vector<std::size_t>{0});
    return out;
  }
  // Partitions of n-2 into at most n parts give the excess over degree 1.
  std::vector<std::size_t> parts;
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t cap) -> void {
    if (remaining == 0) {
      std::vector<std::size_t> d(n, 1);
      for (std::size_t i = 0; i < parts.size(); ++i) d[i] += parts[i];
      out.emplace_back(std::move(d));
      return;
    }
    if (parts.size() == n) return;
    for (std::size_t p = std::min(cap, remaining); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n - 2, n - 2);
  return out;
}

}  // namespace steiner_ecc
