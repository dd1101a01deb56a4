#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "steiner_ecc/canonical.hpp"
#include "steiner_ecc/census.hpp"
#include "steiner_ecc/extremal.hpp"
#include "steiner_ecc/transforms.hpp"

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

// Donor 0 carries two leaves (depth 1), receiver 2 carries a depth-2 branch.
Tree lopsided() {
  return from_edge_list({{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {5, 6}, {2, 7}});
}

TEST(Sigma, SpiderHasOneSite) {
  const Tree t = fixtures::s222();
  const auto sites = find_sigma_sites(t);
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0].diametric_path.vertices(), (std::vector<Vertex>{2, 1, 0, 3, 4}));
  EXPECT_EQ(sites[0].attach_index, 2u);
  EXPECT_EQ(sites[0].off_path_vertex, 5u);
  EXPECT_EQ(sites[0].receiver(), 4u);
}

TEST(Sigma, SpiderBecomesCaterpillar) {
  const Tree t = fixtures::s222();
  const auto o = sigma_transform(t, find_sigma_sites(t)[0]);
  EXPECT_EQ(o.kind, TransformKind::Sigma);
  EXPECT_TRUE(o.after.adjacent(4, 6));
  EXPECT_FALSE(o.after.adjacent(5, 6));
  EXPECT_EQ(o.after.degree(5), 1u);
  EXPECT_EQ(degree_sequence(o.after), degree_sequence(t));
  EXPECT_TRUE(is_caterpillar(o.after));
  EXPECT_EQ(o.aecc3_before, Rational(37, 7));
  EXPECT_EQ(o.aecc3_after, Rational(38, 7));
  EXPECT_EQ(o.delta(), Rational(1, 7));
}

TEST(Sigma, InvalidSites) {
  const Tree t = fixtures::s222();
  const PathInTree p(t, {2, 1, 0, 3, 4});
  EXPECT_EQ(error_of([&] { sigma_transform(t, {p, 3, 5}); }), ErrorCode::InvalidSite);
  EXPECT_EQ(error_of([&] { sigma_transform(t, {p, 1, 5}); }), ErrorCode::InvalidSite);
  EXPECT_EQ(error_of([&] { sigma_transform(t, {p, 2, 3}); }), ErrorCode::InvalidSite);
  // Pendant edge.
  const Tree h = fixtures::spider({2, 2, 1});
  const PathInTree hp(h, {2, 1, 0, 3, 4});
  EXPECT_EQ(error_of([&] { sigma_transform(h, {hp, 2, 5}); }), ErrorCode::InvalidSite);
  // Path that is not diametrical.
  const PathInTree short_path(t, {1, 0, 3, 4});
  EXPECT_EQ(error_of([&] { sigma_transform(t, {short_path, 1, 5}); }),
            ErrorCode::InvalidSite);
}

TEST(Sigma, NoSitesExactlyOnCaterpillars) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const Tree& t : enumerate_free_trees(n)) {
      ASSERT_EQ(find_sigma_sites(t).empty(), is_caterpillar(t));
    }
  }
}

TEST(Sigma, RandomMonotoneAndDegreePreserving) {
  std::mt19937_64 rng(41);
  std::size_t checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Tree t = random_tree(4 + rng() % 30, rng);
    for (const auto& s : find_sigma_sites(t)) {
      ASSERT_LE(s.attach_index, s.diametric_path.length() / 2);
      const auto o = sigma_transform(t, s);
      ASSERT_EQ(degree_sequence(o.after), degree_sequence(t));
      ASSERT_GT(o.aecc3_after, o.aecc3_before);
      ASSERT_EQ(o.aecc3_after, aecc3(o.after));
      ++checked;
    }
  }
  EXPECT_GT(checked, 50u);
}

TEST(Sigma, ReductionEndsAtCaterpillarOfSameClass) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const Tree t = random_tree(4 + rng() % 25, rng);
    const auto chain = reduce_to_caterpillar(t);
    const Tree& last = chain.empty() ? t : chain.back().after;
    ASSERT_TRUE(is_caterpillar(last));
    ASSERT_EQ(degree_sequence(last), degree_sequence(t));
    if (t.order() >= 3) {
      ASSERT_EQ(aecc3(last), formula_thm1_bound(degree_sequence(t)));
    }
  }
}

TEST(Pi, HTreeTieGoesToSmallerId) {
  const Tree t = fixtures::h_tree();
  const auto site = make_pi_site(t, PathInTree(t, {2, 1, 0}));
  EXPECT_EQ(site.donor(), 0u);
  EXPECT_EQ(site.receiver(), 2u);
  const auto o = pi_transform(t, site);
  EXPECT_EQ(o.after.degree(2), 5u);
  EXPECT_EQ(o.after.degree(0), 1u);
  EXPECT_TRUE(is_isomorphic(o.after, fixtures::spider({2, 1, 1, 1, 1})));
  EXPECT_EQ(o.aecc3_before, Rational(32, 7));
  EXPECT_EQ(o.aecc3_after, Rational(26, 7));
}

TEST(Pi, ShallowerSideDonates) {
  const Tree t = lopsided();
  const auto site = make_pi_site(t, PathInTree(t, {2, 1, 0}));
  EXPECT_EQ(site.donor(), 0u);
  EXPECT_EQ(error_of([&] { pi_transform(t, PiSite{PathInTree(t, {2, 1, 0})}); }),
            ErrorCode::InvalidSite);
  const auto o = pi_transform(t, site);
  EXPECT_LE(o.aecc3_after, o.aecc3_before);
}

TEST(Pi, InnerVertexMustHaveDegreeTwo) {
  const Tree t = fixtures::s222();
  EXPECT_EQ(error_of([&] { make_pi_site(t, PathInTree(t, {1, 0, 3})); }),
            ErrorCode::InvalidSite);
  EXPECT_EQ(error_of([&] { pi_transform(t, PiSite{PathInTree(t, {1, 0, 3})}); }),
            ErrorCode::InvalidSite);
}

TEST(Pi, SitesOnPath) {
  // Every subpath of P_4 is degree-2-interior: 3 + 2 + 1.
  EXPECT_EQ(find_pi_sites(fixtures::path(4)).size(), 6u);
}

TEST(Pi, RandomNeverIncreases) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 150; ++trial) {
    const Tree t = random_tree(3 + rng() % 30, rng);
    for (const auto& s : find_pi_sites(t)) {
      const auto o = pi_transform(t, s);
      ASSERT_LE(o.aecc3_after, o.aecc3_before) << s.describe();
      ASSERT_EQ(o.after.order(), t.order());
    }
  }
}

TEST(Pi, StarReductionKeepsSegments) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const Tree t = random_tree(3 + rng() % 25, rng);
    const auto chain = reduce_to_generalized_star(t);
    const Tree& last = chain.empty() ? t : chain.back().after;
    ASSERT_TRUE(is_generalized_star(last));
    ASSERT_EQ(segment_sequence(last), segment_sequence(t));
    ASSERT_LE(aecc3(last), aecc3(t));
    ASSERT_TRUE(is_isomorphic(last, generalized_star(segment_sequence(t))));
  }
}

TEST(Rebalance, SpiderChain) {
  const Tree start = fixtures::spider({4, 1, 1});
  const auto chain = balance_generalized_star(start);
  ASSERT_EQ(chain.size(), 2u);
  EXPECT_TRUE(is_isomorphic(chain[0].after, fixtures::spider({3, 2, 1})));
  EXPECT_TRUE(is_isomorphic(chain[1].after, fixtures::s222()));
  EXPECT_EQ(chain[0].aecc3_before, Rational(38, 7));
  EXPECT_EQ(chain[0].aecc3_after, Rational(38, 7));
  EXPECT_EQ(chain[1].aecc3_after, Rational(37, 7));
  EXPECT_EQ(error_of([&] { rebalance_step(chain[1].after); }), ErrorCode::AlreadyBalanced);
}

TEST(Rebalance, Errors) {
  EXPECT_EQ(error_of([] { rebalance_step(fixtures::h_tree()); }),
            ErrorCode::NotGeneralizedStar);
  EXPECT_EQ(error_of([] { balance_generalized_star(fixtures::h_tree()); }),
            ErrorCode::NotGeneralizedStar);
  EXPECT_EQ(error_of([] { rebalance_step(fixtures::path(6)); }), ErrorCode::AlreadyBalanced);
  EXPECT_EQ(error_of([] { rebalance_step(fixtures::claw()); }), ErrorCode::AlreadyBalanced);
}

TEST(Rebalance, EveryStarReachesBalancedStarMonotonically) {
  for (std::size_t n = 4; n <= 11; ++n) {
    for (const Tree& t : enumerate_free_trees(n)) {
      if (branch_vertices(t).size() != 1) continue;
      const auto chain = balance_generalized_star(t);
      const Tree& last = chain.empty() ? t : chain.back().after;
      const auto m = star_legs(t).size();
      ASSERT_TRUE(is_isomorphic(last, balanced_star(n, m)));
      for (const auto& o : chain) ASSERT_LE(o.aecc3_after, o.aecc3_before);
    }
  }
}

}  // namespace
}  // namespace steiner_ecc
