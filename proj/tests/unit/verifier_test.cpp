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

// A sink component {u, w} whose preimage contains x2, which cannot follow the
// cycle u w forever.
struct StrandedPreimage {
  DirectedGraph g = make_graph({"S", "x1", "y1", "x2", "z"}, {{"S", "S"},
                                                              {"S", "x1"},
                                                              {"x1", "y1"},
                                                              {"y1", "x1"},
                                                              {"S", "x2"},
                                                              {"x2", "z"},
                                                              {"z", "z"}});
  DirectedGraph h = make_graph({"s", "u", "w"}, {{"s", "s"}, {"s", "u"}, {"u", "w"}, {"w", "u"}, {"w", "w"}});
  BlockMap phi = make_map({{"S", "s"}, {"x1", "u"}, {"y1", "w"}, {"x2", "u"}, {"z", "w"}});
};

}  // namespace

TEST(IsValidBlockMap, Examples) {
  EXPECT_TRUE(is_valid_block_map(golden_left(), golden_left(), identity(golden_left())));
  EXPECT_TRUE(is_valid_block_map(golden_left(), golden_mean(), golden_map()));
  EXPECT_FALSE(is_valid_block_map(two_cycle(), make_graph({"x"}, {}), make_map({{"a", "x"}, {"b", "x"}})));
  EXPECT_FALSE(is_valid_block_map(two_cycle(), two_cycle(), make_map({{"a", "a"}})));
}

TEST(IsInjectiveCycleMap, GoldenMean) {
  auto r = is_injective_cycle_map(golden_left(), golden_mean(), golden_map());
  EXPECT_TRUE(r.injective);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(IsInjectiveCycleMap, CollapsedTwoCycle) {
  auto r = is_injective_cycle_map(two_cycle(), self_loop("x"), make_map({{"a", "x"}, {"b", "x"}}));
  ASSERT_FALSE(r.injective);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->first, (Word{"a", "b"}));
  EXPECT_EQ(r.witness->second, (Word{"b", "a"}));
  EXPECT_EQ(r.witness->image, (Word{"x", "x"}));
}

TEST(IsInjectiveCycleMap, DiamondExampleIsInjectiveOnCycles) {
  EXPECT_TRUE(is_injective_cycle_map(diamond_left(), diamond_right(), diamond_map()).injective);
}

TEST(IsInjectiveCycleMap, SingletonSccWithSelfLoopIsAWitness) {
  // Vertices p, q with self-loops both sent to a self-loop vertex: the pair
  // (p, q) alone forms a cycle in the meta-graph.
  DirectedGraph g = make_graph({"p", "q"}, {{"p", "p"}, {"q", "q"}});
  auto r = is_injective_cycle_map(g, self_loop("x"), make_map({{"p", "x"}, {"q", "x"}}));
  ASSERT_FALSE(r.injective);
  EXPECT_EQ(r.witness->first, Word{"p"});
  EXPECT_EQ(r.witness->second, Word{"q"});
}

TEST(IsConjugacyIrreducible, Examples) {
  EXPECT_TRUE(is_conjugacy_irreducible(golden_left(), golden_mean(), golden_map()).is_conjugacy);
  EXPECT_TRUE(is_conjugacy_irreducible(golden_left(), golden_left(), identity(golden_left())).is_conjugacy);
  Verdict v = is_conjugacy_irreducible(golden_left(), two_cycle("x", "y"),
                                       make_map({{"a", "x"}, {"b", "y"}, {"c", "y"}, {"d", "y"}, {"e", "y"}}));
  EXPECT_EQ(v.failure, Failure::invalid_code);
  EXPECT_THROW(is_conjugacy_irreducible(nonsurj_left(), nonsurj_right(), nonsurj_map()), ContractError);
}

TEST(IsConjugacyIrreducible, TraceWitness) {
  // Injective on cycles but misses the target's self-loop.
  DirectedGraph h = make_graph({"x", "y"}, {{"x", "y"}, {"y", "x"}, {"y", "y"}});
  Verdict v = is_conjugacy_irreducible(two_cycle(), h, make_map({{"a", "x"}, {"b", "y"}}));
  EXPECT_EQ(v.failure, Failure::not_surjective);
  ASSERT_TRUE(v.witness.has_value());
  const auto& t = std::get<TraceMismatch>(*v.witness);
  EXPECT_EQ(t.power, 1u);
  EXPECT_EQ(t.source_trace, 0);
  EXPECT_EQ(t.target_trace, 1);
}

TEST(AddSinkComponents, SingletonSinkWithSingletonPreimageUnchanged) {
  OneBlockCode code = make_one_block(nonsurj_left(), nonsurj_right(), nonsurj_map());
  OneBlockCode out = add_sink_components(code);
  EXPECT_EQ(out.source, code.source);
  EXPECT_EQ(out.target, code.target);
  EXPECT_EQ(out.image, code.image);
}

TEST(AddSinkComponents, StrandedPreimageIsExcluded) {
  StrandedPreimage s;
  OneBlockCode out = add_sink_components(make_one_block(s.g, s.h, s.phi));
  ASSERT_EQ(out.target.vertex_count(), 4u);
  ASSERT_EQ(out.source.vertex_count(), 6u);
  EXPECT_EQ(out.target.name(3), "t1");
  EXPECT_TRUE(out.target.has_edge("u", "t1"));
  EXPECT_TRUE(out.target.has_edge("t1", "t1"));
  EXPECT_EQ(out.source.name(5), "t1'");
  EXPECT_TRUE(out.source.has_edge("x1", "t1'"));
  EXPECT_FALSE(out.source.has_edge("x2", "t1'"));
  EXPECT_EQ(out.image[5], 3u);
  EXPECT_EQ(verify_one_block(out), verify_one_block(make_one_block(s.g, s.h, s.phi)));
}

TEST(AddSourceComponents, MirrorsSinkProcessing) {
  StrandedPreimage s;
  OneBlockCode rev{reverse_edges(s.g), reverse_edges(s.h), make_one_block(s.g, s.h, s.phi).image};
  OneBlockCode out = add_source_components(rev);
  EXPECT_TRUE(out.target.has_edge("s1", "u"));
  EXPECT_TRUE(out.source.has_edge("s1'", "x1"));
  EXPECT_FALSE(out.source.has_edge("s1'", "x2"));
}

TEST(AugmentToIrreducible, NonConjugateExamples) {
  for (auto [g, h, phi, expected] :
       {std::tuple{nonsurj_left(), nonsurj_right(), nonsurj_map(), Failure::not_surjective},
        std::tuple{diamond_left(), diamond_right(), diamond_map(), Failure::not_injective}}) {
    OneBlockCode code = make_one_block(g, h, phi);
    OneBlockCode star = augment(code);
    EXPECT_TRUE(star.target.contains("*"));
    EXPECT_TRUE(star.source.contains("*"));
    EXPECT_EQ(verify_one_block(star).failure, expected);
    EXPECT_EQ(verify_one_block(code).failure, expected);
  }
}

TEST(AugmentToIrreducible, RejectsUnprocessedComponents) {
  StrandedPreimage s;
  EXPECT_THROW(augment_to_irreducible(make_one_block(s.g, s.h, s.phi)), ContractError);
}

TEST(Verify, WorkedExamples) {
  EXPECT_TRUE(verify(golden_left(), golden_mean(), golden_map()).is_conjugacy);
  Verdict a = verify(nonsurj_left(), nonsurj_right(), nonsurj_map());
  EXPECT_FALSE(a.is_conjugacy);
  EXPECT_EQ(a.failure, Failure::not_surjective);
  Verdict b = verify(diamond_left(), diamond_right(), diamond_map());
  EXPECT_FALSE(b.is_conjugacy);
  EXPECT_EQ(b.failure, Failure::not_injective);
  ASSERT_TRUE(b.witness.has_value());
  EXPECT_TRUE(std::holds_alternative<Diamond>(*b.witness) || std::holds_alternative<CyclePair>(*b.witness));
}

TEST(Verify, InvalidCodeWitnesses) {
  Verdict v = verify(two_cycle(), make_graph({"x"}, {}), make_map({{"a", "x"}, {"b", "x"}}));
  EXPECT_EQ(v.failure, Failure::invalid_code);
  EXPECT_EQ(std::get<InvalidWord>(*v.witness).word, (Word{"a", "b"}));
  Verdict missing = verify(two_cycle(), two_cycle(), make_map({{"a", "a"}}));
  EXPECT_EQ(missing.failure, Failure::invalid_code);
  Verdict unknown = verify(two_cycle(), two_cycle(), make_map({{"a", "a"}, {"b", "q"}}));
  EXPECT_EQ(unknown.failure, Failure::invalid_code);
}

TEST(Verify, TwoBlockRecodingIsAConjugacy) {
  // The 2-block presentation of the golden mean shift maps back by its first symbol.
  DirectedGraph hb = higher_block_graph(golden_mean(), 2);
  BlockMap first(1, 0);
  for (const auto& v : hb.names()) first.set({v}, v.substr(0, 1));
  EXPECT_TRUE(verify(hb, golden_mean(), first).is_conjugacy);

  BlockMap forward(2, 0);
  for (const auto& v : hb.names()) forward.set({v.substr(0, 1), v.substr(2, 1)}, v);
  EXPECT_TRUE(verify(golden_mean(), hb, forward).is_conjugacy);
}

TEST(Verify, ShiftedBlockMapIsStillAConjugacy) {
  // Identity read with anticipation 1 (image at i is x[i+1]) is the shift map.
  BlockMap shift(2, 0);
  for (auto [a, b] : golden_mean().edges()) shift.set({golden_mean().name(a), golden_mean().name(b)}, golden_mean().name(b));
  EXPECT_TRUE(verify(golden_mean(), golden_mean(), shift).is_conjugacy);
}

TEST(Verify, EmptyShifts) {
  DirectedGraph path = make_graph({"a", "b"}, {{"a", "b"}});
  EXPECT_TRUE(verify(path, make_graph({"x"}, {}), make_map({{"a", "x"}, {"b", "x"}})).is_conjugacy);
  Verdict v = verify(path, self_loop("x"), make_map({{"a", "x"}, {"b", "x"}}));
  EXPECT_EQ(v.failure, Failure::not_surjective);
}

TEST(Verify, NonEssentialPartsAreIgnored) {
  DirectedGraph g = golden_left();
  g.add_vertex("x");
  g.add_edge("a", "x");
  BlockMap phi = golden_map();
  phi.set({"x"}, "b");
  EXPECT_TRUE(verify(g, golden_mean(), phi).is_conjugacy);
}

TEST(Verify, ThreadCountDoesNotChangeTheVerdict) {
  for (unsigned threads : {1u, 2u, 4u}) {
    EXPECT_EQ(verify(diamond_left(), diamond_right(), diamond_map(), {threads}),
              verify(diamond_left(), diamond_right(), diamond_map()));
  }
}

TEST(VerifyEdgeShift, Examples) {
  MultiGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("e", "a", "b");
  g.add_edge("f", "b", "a");
  g.add_edge("l", "b", "b");
  BlockMap id = make_map({{"e", "e"}, {"f", "f"}, {"l", "l"}});
  EXPECT_TRUE(verify_edge_shift(g, g, id).is_conjugacy);

  MultiGraph r;
  r.add_vertex("p");
  r.add_vertex("q");
  r.add_edge("E", "p", "q");
  r.add_edge("F", "q", "p");
  r.add_edge("L", "q", "q");
  EXPECT_TRUE(verify_edge_shift(g, r, make_map({{"e", "E"}, {"f", "F"}, {"l", "L"}})).is_conjugacy);

  MultiGraph two;
  two.add_vertex("a");
  two.add_edge("e", "a", "a");
  two.add_edge("f", "a", "a");
  MultiGraph one;
  one.add_vertex("a");
  one.add_edge("x", "a", "a");
  Verdict v = verify_edge_shift(two, one, make_map({{"e", "x"}, {"f", "x"}}));
  EXPECT_FALSE(v.is_conjugacy);
  EXPECT_EQ(v.failure, Failure::not_injective);
}
