#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "steiner_ecc/canonical.hpp"
#include "steiner_ecc/census.hpp"
#include "steiner_ecc/tree.hpp"
#include "steiner_ecc/tree_io.hpp"

namespace steiner_ecc {
namespace {

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::ParseError;
}

TEST(FromEdgeList, SmallestTree) {
  const Tree t = from_edge_list({{0, 1}});
  EXPECT_EQ(t.order(), 2u);
  EXPECT_EQ(t.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(FromEdgeList, RejectsNonTrees) {
  EXPECT_EQ(error_of([] { from_edge_list({{0, 1}, {1, 2}, {2, 0}}); }), ErrorCode::HasCycle);
  EXPECT_EQ(error_of([] { from_edge_list({{0, 1}, {2, 3}}); }), ErrorCode::NotConnected);
  EXPECT_EQ(error_of([] { from_edge_list({{0, 2}}); }), ErrorCode::BadVertexIds);
  EXPECT_EQ(error_of([] { from_edge_list({{0, 1}, {1, 1}}); }), ErrorCode::HasCycle);
  EXPECT_EQ(error_of([] { from_edge_list({{0, 1}, {1, 0}}); }), ErrorCode::HasCycle);
}

TEST(FromEdgeList, EmptyIsSingleVertex) {
  const Tree t = from_edge_list(std::vector<Edge>{});
  EXPECT_EQ(t.order(), 1u);
  EXPECT_EQ(diameter(t), 0u);
}

TEST(Prufer, BaseCase) {
  const Tree t = from_prufer(std::vector<Vertex>{});
  EXPECT_EQ(t.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_TRUE(to_prufer(t).empty());
}

TEST(Prufer, RepeatedZeroIsStarAtZero) {
  const Tree t = from_prufer(std::vector<Vertex>{0, 0});
  EXPECT_EQ(t.order(), 4u);
  EXPECT_EQ(t.degree(0), 3u);
  EXPECT_EQ(t.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(Prufer, ExhaustiveRoundTripOrderFour) {
  for (Vertex a = 0; a < 4; ++a) {
    for (Vertex b = 0; b < 4; ++b) {
      const std::vector<Vertex> code{a, b};
      EXPECT_EQ(to_prufer(from_prufer(code)), code);
    }
  }
}

TEST(Prufer, RandomRoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 40;
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = rng() % n;
    EXPECT_EQ(to_prufer(from_prufer(code)), code);
  }
}

TEST(Prufer, BadCode) {
  EXPECT_EQ(error_of([] { from_prufer(std::vector<Vertex>{0, 4}); }), ErrorCode::BadCode);
}

TEST(Distance, Examples) {
  EXPECT_EQ(fixtures::path(4).distance(0, 3), 3u);
  EXPECT_EQ(fixtures::claw().distance(1, 3), 2u);
  const Tree t = fixtures::h_tree();
  for (Vertex v = 0; v < t.order(); ++v) EXPECT_EQ(t.distance(v, v), 0u);
  EXPECT_EQ(error_of([&] { t.distance(0, 7); }), ErrorCode::BadVertexIds);
}

TEST(Distance, MatchesBfsAndAddsAlongPaths) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Tree t = random_tree(2 + rng() % 30, rng);
    const auto adj = oracle::adjacency(t);
    for (Vertex u = 0; u < t.order(); ++u) {
      const auto d = oracle::bfs(adj, u);
      for (Vertex w = 0; w < t.order(); ++w) {
        ASSERT_EQ(t.distance(u, w), d[w]);
        ASSERT_EQ(t.distance(u, w), t.distance(w, u));
        for (Vertex x : path_vertices(t, u, w)) {
          ASSERT_EQ(t.distance(u, w), t.distance(u, x) + t.distance(x, w));
        }
      }
    }
  }
}

TEST(Eccentricity, PathAndClaw) {
  const Tree p5 = fixtures::path(5);
  EXPECT_EQ(eccentricity(p5, 2), 2u);
  EXPECT_EQ(diameter(p5), 4u);
  EXPECT_EQ(radius(p5), 2u);
  EXPECT_EQ(diameter(fixtures::claw()), 2u);
  EXPECT_EQ(radius(fixtures::claw()), 1u);
}

TEST(Eccentricity, SpiderDiametricPathJoinsTwoTips) {
  const Tree t = fixtures::s222();
  EXPECT_EQ(diameter(t), 4u);
  const auto p = diametric_path(t);
  EXPECT_EQ(p.vertices(), (std::vector<Vertex>{2, 1, 0, 3, 4}));
}

TEST(Eccentricity, DiametricPathProperties) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Tree t = random_tree(2 + rng() % 25, rng);
    const auto adj = oracle::adjacency(t);
    std::size_t diam = 0, rad = SIZE_MAX;
    for (Vertex v = 0; v < t.order(); ++v) {
      const auto e = oracle::bfs_eccentricity(adj, v);
      ASSERT_EQ(eccentricity(t, v), e);
      diam = std::max(diam, e);
      rad = std::min(rad, e);
    }
    ASSERT_EQ(diameter(t), diam);
    ASSERT_EQ(radius(t), rad);
    ASSERT_LE(rad, diam);
    ASSERT_LE(diam, 2 * rad);
    const auto p = diametric_path(t);
    ASSERT_EQ(p.length(), diam);
    ASSERT_LT(p.front(), p.back());
    for (Vertex u = 0; u < t.order(); ++u) {
      for (Vertex v = u + 1; v < t.order(); ++v) {
        if (t.distance(u, v) == diam) {
          ASSERT_LE(p.vertices(), path_vertices(t, u, v));
        }
      }
    }
  }
}

TEST(PathDistance, Examples) {
  const Tree t = fixtures::s222();
  const auto p = diametric_path(t);
  EXPECT_EQ(distance_to_path(t, 0, p), 0u);
  EXPECT_EQ(distance_to_path(t, 6, p), 2u);
  EXPECT_EQ(path_eccentricity(t, p), 2u);
  const Tree p7 = fixtures::path(7);
  EXPECT_EQ(path_eccentricity(p7, tree_path(p7, 0, 6)), 0u);
}

TEST(PathInTree, RejectsNonPaths) {
  const Tree t = fixtures::s222();
  EXPECT_EQ(error_of([&] { PathInTree(t, {2, 0}); }), ErrorCode::InvalidPath);
  EXPECT_EQ(error_of([&] { PathInTree(t, {1, 0, 1}); }), ErrorCode::InvalidPath);
  EXPECT_EQ(error_of([&] { PathInTree(t, {}); }), ErrorCode::InvalidPath);
}

TEST(DegreeSequence, Examples) {
  EXPECT_EQ(degree_sequence(fixtures::path(4)).values(),
            (std::vector<std::size_t>{2, 2, 1, 1}));
  EXPECT_EQ(degree_sequence(fixtures::claw()).values(),
            (std::vector<std::size_t>{3, 1, 1, 1}));
  const auto fig = degree_sequence(fixtures::figure_one_caterpillar());
  EXPECT_EQ(fig.order(), 16u);
  std::vector<std::size_t> expect{5, 5, 3, 3, 3};
  expect.resize(16, 1);
  EXPECT_EQ(fig.values(), expect);
  EXPECT_TRUE(is_caterpillar(fixtures::figure_one_caterpillar()));
}

TEST(DegreeSequence, RejectsInfeasible) {
  EXPECT_EQ(error_of([] { DegreeSequence({2, 2, 1}); }), ErrorCode::InfeasibleSequence);
  EXPECT_EQ(error_of([] { DegreeSequence({1, 2, 1}); }), ErrorCode::InfeasibleSequence);
  EXPECT_EQ(error_of([] { DegreeSequence({2, 2, 0, 0}); }),
            ErrorCode::InfeasibleSequence);
}

TEST(Segments, Examples) {
  EXPECT_EQ(segment_sequence(fixtures::path(5)).values(), (std::vector<std::size_t>{4}));
  EXPECT_EQ(segment_sequence(fixtures::s222()).values(),
            (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_EQ(segment_sequence(fixtures::h_tree()).values(),
            (std::vector<std::size_t>{2, 1, 1, 1, 1}));
  EXPECT_EQ(segment_sequence(fixtures::path(2)).values(), (std::vector<std::size_t>{1}));
  EXPECT_EQ(error_of([] { segments(Tree{}); }), ErrorCode::TooSmall);
}

TEST(Segments, LengthsSumToEdgeCount) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Tree t = random_tree(2 + rng() % 50, rng);
    const auto segs = segments(t);
    std::size_t total = 0;
    for (const auto& s : segs) {
      total += s.length();
      ASSERT_NE(t.degree(s.front()), 2u);
      ASSERT_NE(t.degree(s.back()), 2u);
      for (std::size_t i = 1; i < s.length(); ++i) ASSERT_EQ(t.degree(s[i]), 2u);
    }
    ASSERT_EQ(total, t.order() - 1);
  }
}

TEST(Canonical, RelabelingInvariance) {
  const Tree p4 = fixtures::path(4);
  const Tree shuffled = relabel(p4, {2, 0, 3, 1});
  EXPECT_NE(p4.edges(), shuffled.edges());
  EXPECT_EQ(canonical_form(p4), canonical_form(shuffled));
  EXPECT_TRUE(is_isomorphic(p4, shuffled));
  EXPECT_FALSE(is_isomorphic(p4, fixtures::claw()));
  EXPECT_NE(canonical_form(p4), canonical_form(fixtures::claw()));
}

TEST(Canonical, TwoShapesOnFourVertices) {
  std::set<CanonicalKey> keys;
  std::size_t decoded = 0;
  for (Vertex a = 0; a < 4; ++a) {
    for (Vertex b = 0; b < 4; ++b) {
      keys.insert(canonical_form(from_prufer(std::vector<Vertex>{a, b})));
      ++decoded;
    }
  }
  EXPECT_EQ(decoded, 16u);
  EXPECT_EQ(keys.size(), 2u);
}

TEST(Canonical, RandomRelabelingAndSeparation) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const Tree t = random_tree(n, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    ASSERT_EQ(canonical_form(t), canonical_form(relabel(t, perm)));
    const Tree other = random_tree(n, rng);
    if (n >= 2 && (degree_sequence(t) != degree_sequence(other) ||
                   segment_sequence(t) != segment_sequence(other))) {
      ASSERT_NE(canonical_form(t), canonical_form(other));
    }
  }
}

TEST(Predicates, CaterpillarMatchesLeafDeletion) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const Tree& t : enumerate_free_trees(n)) {
      ASSERT_EQ(is_caterpillar(t), oracle::caterpillar_by_leaf_deletion(t));
    }
  }
  EXPECT_FALSE(is_caterpillar(fixtures::s222()));
  EXPECT_TRUE(is_caterpillar(fixtures::h_tree()));
  EXPECT_TRUE(is_generalized_star(fixtures::s222()));
  EXPECT_FALSE(is_generalized_star(fixtures::h_tree()));
  EXPECT_TRUE(is_generalized_star(fixtures::path(6)));
}

TEST(Center, OneOrTwoVertices) {
  EXPECT_EQ(center(fixtures::path(5)), (std::vector<Vertex>{2}));
  EXPECT_EQ(center(fixtures::path(4)), (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(center(fixtures::s222()), (std::vector<Vertex>{0}));
}

TEST(EdgeListText, ParsesCommentsAndBlankLines) {
  const Tree t = read_edge_list("# spider\n0 1\n\n1 2\n  # indented comment\n0 3\n");
  EXPECT_EQ(t.order(), 4u);
  EXPECT_EQ(edge_list_string(t), "0 1\n0 3\n1 2\n");
}

TEST(EdgeListText, MalformedLineNamesLineNumber) {
  try {
    read_edge_list("0 1\n1 2 3\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_EQ(error_of([] { read_edge_list("0 -1\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { read_edge_list("0 1\n2 3\n"); }), ErrorCode::NotConnected);
}

TEST(PruferText, EmptyLineIsTwoVertices) {
  EXPECT_TRUE(parse_prufer("").empty());
  EXPECT_EQ(from_prufer(parse_prufer("\n")).order(), 2u);
  EXPECT_EQ(parse_prufer("0, 0,3"), (std::vector<Vertex>{0, 0, 3}));
  EXPECT_EQ(format_prufer({4, 0, 2}), "4,0,2");
  EXPECT_EQ(error_of([] { parse_prufer("1,,2"); }), ErrorCode::ParseError);
}

}  // namespace
}  // namespace steiner_ecc
