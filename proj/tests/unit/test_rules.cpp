#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "mvrcg/rules.hpp"

using namespace mvrcg;
using fixtures::id;

namespace {

NoncolliderJudge two_collider_judge(const MixedGraph& g) {
    // c separates a from d, d separates b from f, and so on
    SepsetMap s;
    s.set(id(g, "a"), id(g, "d"), {id(g, "c")});
    s.set(id(g, "e"), id(g, "d"), {id(g, "c")});
    s.set(id(g, "b"), id(g, "c"), {id(g, "d")});
    s.set(id(g, "f"), id(g, "c"), {id(g, "d")});
    s.set(id(g, "a"), id(g, "e"), {});
    s.set(id(g, "b"), id(g, "f"), {});
    return judge_from_sepsets(s);
}

}  // namespace

TEST(RulesSequential, TwoColliderOrientationFollowsOrdering) {
    const auto g = fixtures::two_collider_graph();
    const auto judge = two_collider_judge(g);
    const Vertex c = id(g, "c"), d = id(g, "d");

    std::vector<RuleFiring> log;
    const auto cfirst = apply_rules_sequential(g, judge, fixtures::order(g, {"a", "b", "c", "d", "e", "f"}), &log);
    EXPECT_TRUE(cfirst.is_directed(c, d));
    ASSERT_EQ(log.size(), 1u);
    EXPECT_EQ(log[0].rule, 1);

    const auto dfirst = apply_rules_sequential(g, judge, fixtures::order(g, {"d", "c", "a", "b", "e", "f"}));
    EXPECT_TRUE(dfirst.is_directed(d, c));
}

TEST(RulesLists, TwoColliderBidirectedForEveryOrdering) {
    auto g = fixtures::two_collider_graph();
    const auto judge = two_collider_judge(g);
    const auto expected = apply_rules_lists(g, judge);
    EXPECT_TRUE(expected.is_bidirected(id(g, "c"), id(g, "d")));
    // relabelling the vertices permutes the input; the output must follow
    std::mt19937_64 rng(2);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<std::string> labels = g.labels();
        std::shuffle(labels.begin(), labels.end(), rng);
        MixedGraph h(labels);
        for (const Edge& e : g.edges())
            h.set_edge(h.index_of(g.label(e.u)), h.index_of(g.label(e.v)), e.at_u, e.at_v);
        SepsetMap s;
        for (auto [x, y, z] : std::vector<std::tuple<const char*, const char*, std::vector<const char*>>>{
                 {"a", "d", {"c"}}, {"e", "d", {"c"}}, {"b", "c", {"d"}}, {"f", "c", {"d"}}, {"a", "e", {}}, {"b", "f", {}}}) {
            VertexSet zs;
            for (const char* l : z) zs.push_back(h.index_of(l));
            s.set(h.index_of(x), h.index_of(y), make_set(zs));
        }
        const auto out = apply_rules_lists(h, judge_from_sepsets(s));
        EXPECT_TRUE(out.is_bidirected(h.index_of("c"), h.index_of("d")));
        EXPECT_EQ(out.edge_count(), expected.edge_count());
    }
}

TEST(Rules, R2OrientsAlongDirectedPath) {
    // a -> b -> c with a -- c: a pdc unless a -> c
    auto g = fixtures::graph("vertices: a,b,c\na -> b\nb -> c\na -- c\n");
    const auto out = apply_rules_lists(g, [](Vertex, Vertex, Vertex) { return true; });
    EXPECT_TRUE(out.is_directed(id(g, "a"), id(g, "c")));
    const auto seq = apply_rules_sequential(g, [](Vertex, Vertex, Vertex) { return true; }, identity_ordering(3));
    EXPECT_EQ(seq, out);
}

TEST(Rules, R2WithBidirectedStep) {
    auto g = fixtures::graph("vertices: a,b,c\na <-> b\nb -> c\na -- c\n");
    const auto out = apply_rules_lists(g, [](Vertex, Vertex, Vertex) { return true; });
    EXPECT_TRUE(out.is_directed(id(g, "a"), id(g, "c")));
}

TEST(Rules, R3OrientsIntoCollider) {
    // a -> b <- c, d adjacent to all three, (a,d,c) a noncollider
    auto g = fixtures::graph("vertices: a,b,c,d\na -> b\nc -> b\nd -- a\nd -- c\nd -- b\n");
    const auto judge = [&](Vertex x, Vertex mid, Vertex y) {
        return mid == id(g, "d") && std::min(x, y) == id(g, "a") && std::max(x, y) == id(g, "c");
    };
    std::vector<RuleFiring> log;
    const auto out = apply_rules_lists(g, judge, &log);
    EXPECT_TRUE(out.is_directed(id(g, "d"), id(g, "b")));
    EXPECT_TRUE(out.is_undirected(id(g, "a"), id(g, "d")));
    ASSERT_EQ(log.size(), 1u);
    EXPECT_EQ(log[0].rule, 3);
}

TEST(Rules, R1RequiresNoncollider) {
    auto g = fixtures::graph("vertices: a,b,c\na -> b\nb -- c\n");
    EXPECT_EQ(apply_rules_lists(g, [](Vertex, Vertex, Vertex) { return false; }), g);
    const auto out = apply_rules_lists(g, [](Vertex, Vertex, Vertex) { return true; });
    EXPECT_TRUE(out.is_directed(id(g, "b"), id(g, "c")));
}

TEST(Rules, BidirectedTailPropagates) {
    // a <-> b -- c behaves like a -> b -- c for R1
    auto g = fixtures::graph("vertices: a,b,c\na <-> b\nb -- c\n");
    const auto out = apply_rules_lists(g, [](Vertex, Vertex, Vertex) { return true; });
    EXPECT_TRUE(out.is_directed(id(g, "b"), id(g, "c")));
}

TEST(Rules, JudgeFromGraph) {
    const auto g = fixtures::graph("vertices: a,b,c\na -> b\nc <-> b\n");
    const auto judge = judge_from_graph(g);
    EXPECT_FALSE(judge(0, 1, 2));
    const auto h = fixtures::graph("vertices: a,b,c\na -> b\nb -> c\n");
    EXPECT_TRUE(judge_from_graph(h)(0, 1, 2));
}
