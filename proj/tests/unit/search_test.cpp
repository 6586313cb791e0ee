#include <gtest/gtest.h>

#include "builders.hpp"
#include "sftconj/sftconj.hpp"

using namespace sftconj;
using namespace sftconj::testing;

namespace {

BlockMap identity(const DirectedGraph& g) {
  BlockMap phi(1, 0);
  for (const auto& v : g.names()) phi.set({v}, v);
  return phi;
}

// Split b, then four amalgamations back down to the golden mean graph.
DirectedGraph golden_split() {
  return split(golden_left(), "b", SplitKind::in_partition, {"c"}, {"a"}, "b1", "b2");
}

std::vector<AmalgamationStep> golden_amalgamations() {
  return {{AmalgamationKind::in, "b1", "d", "b1d"},
          {AmalgamationKind::out, "b1d", "e", "b1de"},
          {AmalgamationKind::in, "b2", "c", "b2c"},
          {AmalgamationKind::out, "b2c", "b1de", "B"}};
}

}  // namespace

TEST(Oracle, Examples) {
  EXPECT_TRUE(oracle_is_conjugacy(golden_left(), golden_mean(), golden_map()).is_conjugacy);
  EXPECT_EQ(oracle_is_conjugacy(nonsurj_left(), nonsurj_right(), nonsurj_map()).failure, Failure::not_surjective);
  EXPECT_EQ(oracle_is_conjugacy(diamond_left(), diamond_right(), diamond_map()).failure, Failure::not_injective);
  EXPECT_TRUE(oracle_is_conjugacy(nonsurj_left(), nonsurj_left(), identity(nonsurj_left())).is_conjugacy);
  EXPECT_EQ(oracle_is_conjugacy(two_cycle(), self_loop("x"), make_map({{"a", "x"}, {"b", "x"}})).failure,
            Failure::not_injective);
}

TEST(Oracle, AgreesWithVerifyOnExamples) {
  for (auto [g, h, phi] : {std::tuple{golden_left(), golden_mean(), golden_map()},
                           std::tuple{nonsurj_left(), nonsurj_right(), nonsurj_map()},
                           std::tuple{diamond_left(), diamond_right(), diamond_map()}}) {
    Verdict a = verify(g, h, phi), b = oracle_is_conjugacy(g, h, phi);
    EXPECT_EQ(a.is_conjugacy, b.is_conjugacy);
    EXPECT_EQ(a.failure, b.failure);
  }
}

TEST(Oracle, ReportsBothFailures) {
  // Collapses the two-cycle and misses the loop at y.
  DirectedGraph h = make_graph({"x", "y"}, {{"x", "x"}, {"x", "y"}, {"y", "x"}, {"y", "y"}});
  OracleReport r = oracle_report(two_cycle(), h, make_map({{"a", "x"}, {"b", "x"}}));
  EXPECT_TRUE(r.valid);
  EXPECT_FALSE(r.injective);
  EXPECT_FALSE(r.surjective);
}

TEST(Oracle, Limits) {
  EXPECT_THROW(oracle_report(golden_left(), golden_mean(), golden_map(), {1 << 20, 2}), BudgetExceeded);
}

TEST(Decide, Examples) {
  auto same = decide_k_block_conjugacy(two_cycle(), two_cycle(), 1);
  ASSERT_TRUE(same.has_value());
  EXPECT_TRUE(verify(two_cycle(), two_cycle(), *same).is_conjugacy);

  auto golden = decide_k_block_conjugacy(golden_left(), golden_mean(), 1);
  ASSERT_TRUE(golden.has_value());
  EXPECT_EQ(*golden, golden_map());

  EXPECT_FALSE(decide_k_block_conjugacy(two_cycle(), self_loop(), 1).has_value());
  EXPECT_FALSE(decide_k_block_conjugacy(golden_mean(), golden_left(), 1).has_value());
}

TEST(Decide, TwoBlockNeededForInverseDirection) {
  // No 1-block conjugacy from the 2-vertex golden mean graph onto its 3-vertex
  // 2-block presentation, but a 2-block one exists.
  DirectedGraph hb = higher_block_graph(golden_mean(), 2);
  EXPECT_FALSE(decide_k_block_conjugacy(golden_mean(), hb, 1).has_value());
  auto phi = decide_k_block_conjugacy(golden_mean(), hb, 2);
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(verify(golden_mean(), hb, *phi).is_conjugacy);
}

TEST(Decide, Budget) {
  SearchOptions tiny{3, 1};
  EXPECT_THROW(decide_k_block_conjugacy(golden_left(), golden_mean(), 1, tiny), BudgetExceeded);
  EXPECT_THROW(decide_k_block_conjugacy(golden_left(), golden_mean(), 0), ContractError);
}

TEST(Decide, ParallelMatchesSerial) {
  auto a = decide_k_block_conjugacy(golden_left(), golden_mean(), 2, {10'000'000, 1});
  auto b = decide_k_block_conjugacy(golden_left(), golden_mean(), 2, {10'000'000, 3});
  EXPECT_EQ(a, b);
}

TEST(Reduce, GoldenLeft) {
  auto q = search_one_block_reduction(golden_left(), 3);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(q->blocks, (std::vector<std::vector<VertexId>>{{0}, {1, 2, 3, 4}}));
  EXPECT_EQ(q->image, make_graph({"a", "b+c+d+e"}, {{"a", "b+c+d+e"}, {"b+c+d+e", "a"}, {"b+c+d+e", "b+c+d+e"}}));
  EXPECT_TRUE(verify(golden_left(), q->image, q->map).is_conjugacy);
}

TEST(Reduce, EllZeroIsIdentityAndTwoCycleDoesNotShrink) {
  auto id = search_one_block_reduction(golden_left(), 0);
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(id->image, golden_left());
  EXPECT_FALSE(search_one_block_reduction(two_cycle(), 1).has_value());
  EXPECT_FALSE(search_one_block_reduction(two_cycle(), 3).has_value());
}

TEST(Reduce, Budget) {
  EXPECT_THROW(search_one_block_reduction(golden_left(), 1, {2, 1}), BudgetExceeded);
}

TEST(Partitions, CountsAreStirlingNumbers) {
  std::size_t count = 0;
  for_each_partition(5, 2, [&](const std::vector<std::size_t>&) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 15u);
  count = 0;
  for_each_partition(6, 3, [&](const std::vector<std::size_t>&) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 90u);
}

TEST(Amalgamation, GoldenSplitAndMerge) {
  DirectedGraph s = golden_split();
  EXPECT_EQ(s.vertex_count(), 6u);
  EXPECT_TRUE(s.has_edge("c", "b1"));
  EXPECT_TRUE(s.has_edge("a", "b2"));
  EXPECT_FALSE(s.has_edge("a", "b1"));
  EXPECT_TRUE(can_amalgamate(s, "b1", "d").has_value());

  auto result = apply_amalgamations(s, golden_amalgamations());
  EXPECT_EQ(result.graph, make_graph({"a", "B"}, {{"a", "B"}, {"B", "a"}, {"B", "B"}}));
  EXPECT_TRUE(verify(s, result.graph, result.map).is_conjugacy);
}

TEST(Amalgamation, NoPairAmalgamatesInGoldenPair) {
  for (const auto& g : {golden_left(), golden_mean()})
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (u != v) {
          EXPECT_FALSE(can_amalgamate(g, u, v).has_value()) << g.name(u) << " " << g.name(v);
        }
}

TEST(Amalgamation, Conditions) {
  // Same out-neighbourhood but a common in-neighbour.
  DirectedGraph g = make_graph({"p", "u", "v", "q"}, {{"p", "u"}, {"p", "v"}, {"u", "q"}, {"v", "q"}});
  EXPECT_FALSE(can_amalgamate(g, "u", "v").has_value());
  // Same in-neighbourhood, disjoint out-neighbourhoods.
  DirectedGraph h = make_graph({"p", "u", "v", "q", "r"}, {{"p", "u"}, {"p", "v"}, {"u", "q"}, {"v", "r"}});
  EXPECT_EQ(can_amalgamate(h, "u", "v"), AmalgamationKind::in);
  EXPECT_THROW(amalgamate(g, "u", "v", "uv"), ContractError);
}

TEST(Amalgamation, SplitThenMergeRestores) {
  DirectedGraph g = golden_left();
  DirectedGraph s = split(g, "a", SplitKind::out_partition, {"b"}, {"c"}, "a1", "a2");
  ASSERT_TRUE(can_amalgamate(s, "a1", "a2").has_value());
  DirectedGraph back = amalgamate(s, "a1", "a2", "a");
  EXPECT_EQ(back.vertex_count(), g.vertex_count());
  for (auto [x, y] : g.edges()) EXPECT_TRUE(back.has_edge(g.name(x), g.name(y)));
  EXPECT_EQ(back.edge_count(), g.edge_count());
}

TEST(Amalgamation, SplitWithSelfLoop) {
  // e has in-neighbours {d, e}. The loop belongs to e2's part, so both copies
  // point at e2.
  DirectedGraph s = split(golden_left(), "e", SplitKind::in_partition, {"d"}, {"e"}, "e1", "e2");
  EXPECT_TRUE(s.has_edge("d", "e1"));
  EXPECT_TRUE(s.has_edge("e1", "e2"));
  EXPECT_TRUE(s.has_edge("e2", "e2"));
  EXPECT_FALSE(s.has_edge("e2", "e1"));
  EXPECT_FALSE(s.has_edge("e1", "e1"));
  EXPECT_TRUE(s.has_edge("e1", "a"));
  EXPECT_TRUE(verify(s, golden_left(), make_map({{"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}, {"e1", "e"}, {"e2", "e"}}))
                  .is_conjugacy);
}

TEST(HittingSet, Brute) {
  EXPECT_EQ(hitting_set_brute(two_set_instance()), (std::vector<Symbol>{"u2"}));
  EXPECT_FALSE(hitting_set_brute({{{"u1"}, {"u2"}}, {"u1", "u2"}, 1}).has_value());
  HittingSetInstance all{{{"u1"}, {"u2"}, {"u3"}}, {"u1", "u2", "u3"}, 3};
  EXPECT_TRUE(hitting_set_brute(all).has_value());
  EXPECT_TRUE(is_hitting_set(two_set_instance(), {"u2"}));
  EXPECT_FALSE(is_hitting_set(two_set_instance(), {"u1"}));
  EXPECT_THROW(validate({{{"zz"}}, {"u1"}, 1}), ContractError);
}
