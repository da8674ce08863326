#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace meshclust;

namespace {

Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST(Io, QuiverAndTerminalRoundTrip) {
  std::mt19937 rng(67);
  for (int k = 0; k < 50; ++k) {
    auto q = oracle::random_quiver(rng, 2 + k % 6, 2);
    ASSERT_EQ(quiver_from_json(reparse(to_json(q))), q);
    auto td = oracle::random_terminal(rng, q, 4, 200);
    ASSERT_EQ(terminal_from_json(reparse(to_json(td))), td);
  }
}

TEST(Io, RejectsBadInput) {
  EXPECT_THROW(quiver_from_json(Json::parse(R"({"n": 2, "arrows": [[1, 2], [2, 1]]})")), CycleError);
  EXPECT_THROW(quiver_from_json(Json::parse(R"({"n": 2})")), ParseError);
  EXPECT_THROW(quiver_from_json(Json::parse(R"({"n": 2, "arrows": [[1, "x"]]})")), ParseError);
  EXPECT_THROW(terminal_from_json(Json::parse(R"({"quiver": {"n": 2, "arrows": [[1, 2]]}, "t": [0, 2]})")),
               TerminalConstraintError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"b": [[0, 1], [1, 0]]})")), ShapeError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"b": [[0, 1], [-1, 0]], "frozen": [3]})")), IndexError);
  EXPECT_THROW(label_from_json(Json::parse("[1, 2]")), ParseError);
  EXPECT_THROW(parse_int_list("1,x"), ParseError);
  EXPECT_EQ(parse_int_list("2, 1,3"), (std::vector<int>{2, 1, 3}));
}

TEST(Io, OrderingAndLabelRoundTrip) {
  Ordering ord{{1, 0}, {2, 0}, {1, 1}, {3, 0}, {2, 1}, {1, 2}, {3, 1}};
  EXPECT_EQ(ordering_from_json(reparse(to_json(ord))), ord);
  IntervalLabel l{2, 0, 1};
  EXPECT_EQ(label_from_json(reparse(to_json(l))), l);
}

TEST(Io, LaurentRoundTrip) {
  auto names = default_names(3);
  auto p = parse_laurent<BigInt>("-123456789012345678901234567890*y1^-2*y3 + 4*y2 - 1", names);
  EXPECT_EQ(laurent_from_json<BigInt>(reparse(to_json(p))), p);
  auto q = parse_laurent<BigRational>("2/7*y1 - 1/2", names);
  EXPECT_EQ(laurent_from_json<BigRational>(reparse(to_json(q))), q);
  EXPECT_THROW(laurent_from_json<BigInt>(Json::parse(R"({"nvars": 2, "terms": [[[1], "1"]]})")), ArityMismatchError);
  EXPECT_THROW(laurent_from_json<BigInt>(Json::parse(R"({"nvars": 1, "terms": [[[1], "1/2"]]})")), ParseError);
}

TEST(Io, MatrixRoundTrip) {
  std::mt19937 rng(71);
  for (int k = 0; k < 50; ++k) {
    auto m = oracle::random_skew(rng, 1 + k % 7, 3, k % 3);
    ASSERT_EQ(matrix_from_json(reparse(to_json(m))), m);
  }
}

TEST(Io, SeedRoundTrip) {
  auto cat = build_category({make_quiver(3, {{1, 2}, {1, 2}, {2, 3}}), {2, 1, 1}});
  Ordering ord{{1, 0}, {2, 0}, {1, 1}, {3, 0}, {2, 1}, {1, 2}, {3, 1}};
  Seed s = initial_seed(cat, ord);
  for (const auto& l : std::vector<IntervalLabel>{{1, 1, 2}, {2, 1, 1}, {1, 2, 2}}) s = mutate_seed(s, *s.find_label(l));
  Seed back = seed_from_json(reparse(to_json(s)));
  EXPECT_EQ(back, s);
  EXPECT_EQ(back.names, s.names);
  EXPECT_EQ(back.dDelta, s.dDelta);
  EXPECT_EQ(back.terminal, s.terminal);
  ASSERT_TRUE(back.labelIndex);
  EXPECT_EQ(*back.labelIndex, *s.labelIndex);

  std::mt19937 rng(73);
  for (int k = 0; k < 30; ++k) {
    Seed p = plain_seed(oracle::random_skew(rng, 2 + k % 5, 2, k % 2));
    auto idx = p.matrix.mutable_indices();
    for (int step = 0; step < 3 && !idx.empty(); ++step) p = mutate_seed(p, idx[rng() % idx.size()]);
    ASSERT_EQ(seed_from_json(reparse(to_json(p))), p);
  }
}

TEST(Io, SeedDefaults) {
  Seed s = seed_from_json(Json::parse(R"({"matrix": {"b": [[0, 1], [-1, 0]], "frozen": []}})"));
  EXPECT_EQ(s.names, default_names(2));
  ASSERT_TRUE(s.vars);
  EXPECT_EQ((*s.vars)[1].to_string(s.names), "y2");
  EXPECT_THROW(seed_from_json(Json::parse(R"({"matrix": {"b": [[0]]}, "vars": ["y1", "y2"]})")), ParseError);
  EXPECT_THROW(seed_from_json(Json::parse(R"({"matrix": {"b": [[0]]}, "names": ["a", "b"]})")), ArityMismatchError);
}

TEST(Io, SeriesRoundTrip) {
  auto s = ShuffleSeries::word({2, 1, 1}, 2) + ShuffleSeries::word({}, BigRational(-1, 3)) + ShuffleSeries::word({3});
  EXPECT_EQ(series_from_json(reparse(to_json(s))), s);
  EXPECT_EQ(to_json(ShuffleSeries::word({2, 1, 1}, 2)).dump(), R"({"2,1,1":"2"})");
}

TEST(Io, Reports) {
  auto cat = build_category({make_quiver(3, {{1, 2}, {1, 2}, {2, 3}}), {2, 1, 1}});
  auto ord = canonical_ordering(cat);
  auto j = category_json(cat, ord);
  EXPECT_EQ(j.dump(), category_json(cat, ord).dump());
  auto dot = category_dot(cat);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("dashed"), std::string::npos);
  EXPECT_NE(category_text(cat, ord).find("(23,6,1 | 14,3 | 11,4)"), std::string::npos);
}

TEST(Io, ExampleChecksPass) {
  for (const auto& r : run_checks(example_checks(), 2)) EXPECT_TRUE(r.passed) << r.id << ": " << r.detail;
  auto m = manifest_json(run_checks(example_checks()));
  EXPECT_TRUE(m.at("passed").get<bool>());
  EXPECT_EQ(m.at("checks").size(), 10u);
}
