#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace meshclust;

namespace {

TerminalData triple() { return {make_quiver(3, {{1, 2}, {1, 2}, {2, 3}}), {2, 1, 1}}; }

Ordering triple_ordering() { return {{1, 0}, {2, 0}, {1, 1}, {3, 0}, {2, 1}, {1, 2}, {3, 1}}; }

}  // namespace

TEST(Cluster, RankTwoExchange) {
  auto s = plain_seed({{{0, 1}, {-1, 0}}, {false, false}});
  auto m = mutate(s, 0);
  const auto& y = s.names;
  EXPECT_EQ((*m.seed.vars)[0].to_string(y), "y1^-1*y2 + y1^-1");
  EXPECT_EQ(m.outFactors, (std::vector<std::pair<std::size_t, long long>>{}));
  EXPECT_EQ(m.inFactors, (std::vector<std::pair<std::size_t, long long>>{{1, 1}}));
}

TEST(Cluster, TypeA2Pentagon) {
  auto s = plain_seed({{{0, 1}, {-1, 0}}, {false, false}});
  Seed t = s;
  std::set<std::string> seen;
  for (int k = 0; k < 5; ++k) {
    t = mutate_seed(t, k % 2);
    seen.insert((*t.vars)[k % 2].to_string(s.names));
  }
  // Five distinct cluster variables and the original cluster up to a swap.
  EXPECT_EQ(seen.size(), 5u);
  EXPECT_EQ((*t.vars)[0], (*s.vars)[1]);
  EXPECT_EQ((*t.vars)[1], (*s.vars)[0]);
}

TEST(Cluster, SeedMutationIsAnInvolution) {
  std::mt19937 rng(23);
  for (int n = 0; n < 200; ++n) {
    auto m = oracle::random_skew(rng, 2 + n % 6, 2, n % 2);
    Seed s = oracle::random_walk(rng, plain_seed(m), 5, 3);
    for (std::size_t k : s.matrix.mutable_indices()) ASSERT_EQ(mutate_seed(mutate_seed(s, k), k), s);
  }
}

TEST(Cluster, LaurentPhenomenonOnRandomWalks) {
  std::mt19937 rng(29);
  for (int n = 0; n < 40; ++n) {
    auto m = oracle::random_skew(rng, 3 + n % 6, 1, n % 2);
    Seed s;
    ASSERT_NO_THROW(s = oracle::random_walk(rng, plain_seed(m), 12, 3));
    for (const auto& v : *s.vars) ASSERT_FALSE(v.is_zero());
  }
}

TEST(Cluster, FrozenCoefficientsSpecialize) {
  // 1 -> 2 with 2 frozen: mu_1 gives (1 + y2)/y1; specializing y2 = 1 gives 2/y1.
  auto s = plain_seed(b_matrix(make_quiver(2, {{1, 2}}), {false, true}));
  auto t = mutate_seed(s, 0);
  EXPECT_EQ(frozen_indices(t), (std::vector<std::size_t>{1}));
  EXPECT_EQ(specialize((*t.vars)[0], {1}).to_string(s.names), "2*y1^-1");
  EXPECT_THROW(mutate_seed(s, 1), FrozenMutationError);
}

TEST(Cluster, InitialSeedOfCategory) {
  auto cat = build_category(triple());
  auto s = initial_seed(cat, canonical_ordering(cat));
  EXPECT_EQ(s.size(), 7u);
  EXPECT_EQ(frozen_indices(s).size(), 3u);
  for (std::size_t k = 0; k < s.size(); ++k) {
    const auto& x = cat.vertices[k];
    EXPECT_EQ(*s.labels[k], (IntervalLabel{x.i, x.a, cat.level(x.i)}));
    EXPECT_EQ(s.matrix.frozen[k], x.a == 0);
  }
  EXPECT_THROW(initial_seed(cat, {{1, 0}}), NotAdaptedError);
}

TEST(Cluster, TrackerExample) {
  auto cat = build_category(triple());
  auto s = initial_seed(cat, triple_ordering(), false);
  auto k = s.find_label({1, 1, 2});
  ASSERT_TRUE(k.has_value());
  auto m = mutate(s, *k);
  EXPECT_EQ(triangle(cat, m.dim->value), "(0,4,13 | 2,8 | 0,2)");
  EXPECT_EQ(triangle(cat, m.delta->value), "(0,0,1 | 2,0 | 0,0)");
  EXPECT_TRUE(m.dim->dominance);
  // Off the schedule the new vector belongs to no interval label.
  EXPECT_FALSE(m.seed.labels[*k].has_value());
  EXPECT_FALSE(m.seed.vars.has_value());
}

TEST(Cluster, TrackersAgreeWithInterval) {
  auto cat = build_category(triple());
  auto s = initial_seed(cat, triple_ordering());
  auto k = *s.find_label({1, 2, 2});
  auto m = mutate(s, k);
  EXPECT_EQ(m.dim->value, projected_dimvec(cat, {1, 1, 1}));
  EXPECT_EQ(*m.seed.labels[k], (IntervalLabel{1, 1, 1}));
  EXPECT_EQ((*m.seed.vars)[k].nvars(), 7u);
}

TEST(Cluster, AmbiguousTieIsReported) {
  // Both arrow sums have the same total but differ.
  Seed s = plain_seed({{{0, 1, -1}, {-1, 0, 0}, {1, 0, 0}}, {false, false, false}});
  s.dimTracker = std::vector<IntVec>{{1, 1}, {1, 0}, {0, 1}};
  EXPECT_THROW(mutate_dimvec(s, 0), AmbiguityError);
}
