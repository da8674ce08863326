#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace meshclust;

namespace {

TerminalData full(const Quiver& q) { return {q, dynkin_levels(q)}; }

Quiver d4() { return make_quiver(4, {{1, 2}, {3, 2}, {2, 4}}); }
Quiver e6() { return make_quiver(6, {{1, 2}, {2, 3}, {4, 3}, {5, 4}, {3, 6}}); }
Quiver e8() { return make_quiver(8, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}}); }

}  // namespace

TEST(Mesh, TerminalConstraint) {
  auto q = make_quiver(2, {{1, 2}});
  EXPECT_THROW(check_terminal({q, {0, 2}}), TerminalConstraintError);
  EXPECT_THROW(check_terminal({q, {2, 0}}), TerminalConstraintError);
  EXPECT_THROW(check_terminal({q, {1}}), TerminalConstraintError);
  EXPECT_THROW(check_terminal({q, {-1, -1}}), TerminalConstraintError);
  EXPECT_NO_THROW(check_terminal({q, {1, 0}}));
  EXPECT_NO_THROW(check_terminal({q, {1, 1}}));
}

TEST(Mesh, TypeA2DimensionVectors) {
  auto dims = dim_vectors({make_quiver(2, {{1, 2}}), {1, 0}});
  EXPECT_EQ(dims.at({2, 0}), (RootVec{1, 1}));
  EXPECT_EQ(dims.at({1, 0}), (RootVec{1, 0}));
  EXPECT_EQ(dims.at({1, 1}), (RootVec{0, 1}));
  EXPECT_EQ(dims.size(), 3u);
}

TEST(Mesh, OverflowBeyondPreinjectiveComponent) {
  EXPECT_THROW(dim_vectors({make_quiver(2, {{1, 2}}), {2, 1}}), DynkinOverflowError);
  EXPECT_THROW(dynkin_levels(make_quiver(2, {{1, 2}, {1, 2}}), 64), DynkinOverflowError);
}

TEST(Mesh, FullComponentIsPositiveRoots) {
  std::vector<Quiver> quivers;
  for (int n = 2; n <= 5; ++n)
    for (const auto& q : oracle::path_orientations(n)) quivers.push_back(q);
  quivers.push_back(d4());
  quivers.push_back(e6());
  quivers.push_back(e8());
  for (const auto& q : quivers) {
    auto cat = build_category(full(q));
    std::set<RootVec> knitted(cat.dims.begin(), cat.dims.end());
    ASSERT_EQ(knitted.size(), cat.size());
    ASSERT_EQ(knitted, oracle::tits_roots(q, q.n == 8 ? 6 : 3));
  }
  EXPECT_EQ(build_category(full(e8())).size(), 120u);
  EXPECT_EQ(build_category(full(d4())).size(), 12u);
}

TEST(Mesh, HomKnittingMatchesIntertwinerOracle) {
  for (int n = 3; n <= 5; ++n)
    for (const auto& q : oracle::path_orientations(n)) {
      auto cat = build_category(full(q));
      for (std::size_t x = 0; x < cat.size(); ++x)
        for (std::size_t z = 0; z < cat.size(); ++z)
          ASSERT_EQ(cat.homTable[x][z], oracle::hom_thin(q, cat.dims[x], cat.dims[z]))
              << to_string(cat.vertices[x]) << " " << to_string(cat.vertices[z]);
    }
}

TEST(Mesh, HomTableBasics) {
  std::mt19937 rng(4);
  auto cat = build_category(oracle::random_terminal(rng, e6(), 10));
  for (std::size_t x = 0; x < cat.size(); ++x) EXPECT_EQ(cat.homTable[x][x], 1);
  // Hom into a module of higher tau-level than the source vanishes
  // (preinjective modules are directed).
  for (std::size_t x = 0; x < cat.size(); ++x)
    for (std::size_t z = 0; z < cat.size(); ++z)
      if (cat.vertices[z].a > cat.vertices[x].a) EXPECT_EQ(cat.homTable[x][z], 0);
}

TEST(Mesh, MeshQuiverShape) {
  auto cat = build_category({make_quiver(3, {{1, 2}, {1, 2}, {2, 3}}), {2, 1, 1}});
  EXPECT_EQ(cat.size(), 7u);
  EXPECT_EQ(cat.gammaMStar.arrows.size(), cat.gammaM.arrows.size() + 4);
  auto tau = [&](MeshVertex x, MeshVertex y) {
    return cat.gammaMStar.count(static_cast<int>(cat.index(x)) + 1, static_cast<int>(cat.index(y)) + 1);
  };
  EXPECT_EQ(tau({1, 0}, {1, 1}), 1);
  EXPECT_EQ(tau({1, 1}, {1, 2}), 1);
  EXPECT_EQ(tau({2, 0}, {1, 0}), 2);
  EXPECT_EQ(tau({1, 1}, {2, 0}), 2);
  EXPECT_EQ(tau({3, 0}, {2, 0}), 1);
}

TEST(Mesh, TripleExampleTriangles) {
  auto cat = build_category({make_quiver(3, {{1, 2}, {1, 2}, {2, 3}}), {2, 1, 1}});
  EXPECT_EQ(triangle(cat, projected_dimvec(cat, {1, 2, 2})), "(1,3,9 | 2,6 | 0,2)");
  EXPECT_EQ(triangle(cat, projected_dimvec(cat, {1, 1, 2})), "(1,4,12 | 2,8 | 0,2)");
  EXPECT_EQ(triangle(cat, projected_dimvec(cat, {1, 0, 2})), "(1,4,13 | 2,8 | 0,2)");
  EXPECT_EQ(triangle(cat, projected_dimvec(cat, {2, 1, 1})), "(0,2,6 | 1,4 | 0,1)");
  EXPECT_EQ(triangle(cat, projected_dimvec(cat, {2, 0, 1})), "(0,2,8 | 1,5 | 0,1)");
  EXPECT_EQ(triangle(cat, projected_dimvec(cat, {3, 1, 1})), "(0,2,4 | 1,3 | 1,0)");
  EXPECT_EQ(triangle(cat, projected_dimvec(cat, {3, 0, 1})), "(0,2,6 | 1,4 | 1,1)");
  EXPECT_THROW(projected_dimvec(cat, {3, 0, 2}), IndexError);
}

TEST(Mesh, TypeA3Triangles) {
  auto cat = build_category({make_quiver(3, {{2, 1}, {2, 3}}), {1, 1, 1}});
  const std::vector<std::pair<IntervalLabel, std::string>> want{
      {{1, 1, 1}, "(1,0 | 1,0 | 0,1)"}, {{1, 0, 1}, "(1,1 | 1,1 | 0,1)"}, {{2, 1, 1}, "(0,1 | 1,1 | 0,1)"},
      {{2, 0, 1}, "(0,1 | 1,2 | 0,1)"}, {{3, 1, 1}, "(0,1 | 1,0 | 1,0)"}, {{3, 0, 1}, "(0,1 | 1,1 | 1,1)"},
      {{1, 0, 0}, "(0,1 | 0,1 | 0,0)"}, {{2, 0, 0}, "(0,0 | 0,1 | 0,0)"}, {{3, 0, 0}, "(0,0 | 0,1 | 0,1)"}};
  for (const auto& [l, s] : want) EXPECT_EQ(triangle(cat, projected_dimvec(cat, l)), s) << to_string(l);
}

TEST(Mesh, ProjectedDimvecIsAdditiveInTheInterval) {
  std::mt19937 rng(21);
  for (int k = 0; k < 30; ++k) {
    auto td = oracle::random_terminal(rng, oracle::random_quiver(rng, 2 + k % 4, 2), 4, 60);
    auto cat = build_category(td);
    for (int i = 1; i <= cat.n(); ++i)
      for (int a = 0; a <= cat.level(i); ++a)
        for (int b = a + 1; b <= cat.level(i); ++b) {
          auto whole = projected_dimvec(cat, {i, a, b});
          auto lo = projected_dimvec(cat, {i, a, b - 1});
          auto hi = projected_dimvec(cat, {i, b, b});
          for (std::size_t s = 0; s < whole.size(); ++s) ASSERT_EQ(whole[s], lo[s] + hi[s]);
        }
  }
}

TEST(Mesh, CanonicalOrderingIsAdapted) {
  std::mt19937 rng(8);
  for (int k = 0; k < 50; ++k) {
    auto td = oracle::random_terminal(rng, oracle::random_quiver(rng, 2 + k % 5, 2), 5, 200);
    auto cat = build_category(td);
    auto ord = canonical_ordering(cat);
    ASSERT_NO_THROW(validate_ordering(cat, ord));
    ASSERT_NO_THROW(adapted_word(cat, ord));
  }
  auto cat = build_category({make_quiver(3, {{1, 2}, {1, 2}, {2, 3}}), {2, 1, 1}});
  Ordering bad{{2, 0}, {1, 0}, {1, 1}, {3, 0}, {2, 1}, {1, 2}, {3, 1}};
  EXPECT_THROW(validate_ordering(cat, bad), NotAdaptedError);
  EXPECT_THROW(validate_ordering(cat, {{1, 0}}), NotAdaptedError);
}

TEST(Mesh, DeltaDims) {
  auto cat = build_category({make_quiver(3, {{1, 2}, {1, 2}, {2, 3}}), {2, 1, 1}});
  Ordering ord{{1, 0}, {2, 0}, {1, 1}, {3, 0}, {2, 1}, {1, 2}, {3, 1}};
  EXPECT_EQ(triangle(cat, delta_dims(cat, ord)), "(23,6,1 | 14,3 | 11,4)");
  EXPECT_EQ(triangle(cat, delta_dims(cat, canonical_ordering(cat))), "(23,6,1 | 14,3 | 11,4)");
  EXPECT_EQ(adapted_word(cat, ord), (ReducedWord{1, 2, 1, 3, 2, 1, 3}));
}

TEST(Mesh, LevelZeroCategory) {
  auto cat = build_category({make_quiver(3, {{1, 2}, {2, 3}}), {0, 0, 0}});
  EXPECT_EQ(cat.size(), 3u);
  EXPECT_TRUE(cat.gammaMStar.arrows == cat.gammaM.arrows);
}
