#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "mvrcg/dataset.hpp"
#include "mvrcg/graph_io.hpp"

using namespace mvrcg;

TEST(MixedGraph, MarksAreSymmetric) {
    MixedGraph g({"a", "b", "c"});
    g.add_directed(2, 0);
    EXPECT_TRUE(g.is_directed(2, 0));
    EXPECT_FALSE(g.is_directed(0, 2));
    EXPECT_EQ(g.mark(0, 2), Mark::arrow);
    EXPECT_EQ(g.mark(2, 0), Mark::tail);
    const auto edges = g.edges();
    ASSERT_EQ(edges.size(), 1u);
    EXPECT_EQ(edges[0].u, 0);
    EXPECT_EQ(edges[0].v, 2);
    EXPECT_EQ(edges[0].kind(), EdgeKind::directed);
    g.add_arrowhead(2, 0);
    EXPECT_TRUE(g.is_bidirected(0, 2));
    g.remove_edge(2, 0);
    EXPECT_EQ(g.edge_count(), 0);
}

TEST(MixedGraph, ArrowheadOnUndirected) {
    MixedGraph g({"a", "b"});
    g.add_undirected(0, 1);
    g.add_arrowhead(1, 0);
    EXPECT_TRUE(g.is_directed(0, 1));
    EXPECT_THROW(MixedGraph({"a", "b"}).add_arrowhead(0, 1), DomainError);
}

TEST(MixedGraph, RejectsBadInput) {
    EXPECT_THROW(MixedGraph({"a", "a"}), DomainError);
    EXPECT_THROW(MixedGraph({"a", ""}), DomainError);
    MixedGraph g({"a", "b"});
    EXPECT_THROW(g.add_directed(0, 0), DomainError);
    EXPECT_THROW(g.add_directed(0, 2), DomainError);
    EXPECT_THROW(g.index_of("z"), DomainError);
}

TEST(MixedGraph, SkeletonAndEquality) {
    const auto g = fixtures::two_collider_graph();
    const auto s = g.skeleton();
    EXPECT_EQ(s.edge_count(), g.edge_count());
    for (const Edge& e : s.edges()) EXPECT_EQ(e.kind(), EdgeKind::undirected);
    EXPECT_NE(s, g);
    EXPECT_EQ(s, g.skeleton().skeleton());
    EXPECT_EQ(MixedGraph::complete_undirected({"x", "y", "z"}).edge_count(), 3);
}

TEST(EdgeList, RoundTrip) {
    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 20; ++rep) {
        const auto g = fixtures::random_mixed(7, 0.5, rng);
        EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
    }
}

TEST(EdgeList, ParsesAllOperatorsAndComments) {
    const auto g = parse_edge_list("# test\nvertices: p, q, r, s\n\nq -> p   # trailing\nq <-> r\nr -- s\n");
    EXPECT_EQ(g.labels(), (std::vector<std::string>{"p", "q", "r", "s"}));
    EXPECT_TRUE(g.is_directed(1, 0));
    EXPECT_TRUE(g.is_bidirected(1, 2));
    EXPECT_TRUE(g.is_undirected(2, 3));
    EXPECT_EQ(format_edge_list(g), "vertices: p,q,r,s\nq -> p\nq <-> r\nr -- s\n");
}

TEST(EdgeList, HeaderlessUsesFirstAppearance) {
    const auto g = parse_edge_list("z -> y\ny -- x\n");
    EXPECT_EQ(g.labels(), (std::vector<std::string>{"z", "y", "x"}));
}

TEST(EdgeList, CanonicalOutput) {
    const auto g = parse_edge_list("vertices: a,b,c\nc -> a\nb <-> c\n");
    EXPECT_EQ(format_edge_list(g), "vertices: a,b,c\nc -> a\nb <-> c\n");
}

TEST(EdgeList, Errors) {
    EXPECT_THROW(parse_edge_list("a -> b\nb -> a\n"), ParseError);
    EXPECT_THROW(parse_edge_list("a -> a\n"), ParseError);
    EXPECT_THROW(parse_edge_list("vertices: a,b\na -> c\n"), ParseError);
    EXPECT_THROW(parse_edge_list("a => b\n"), ParseError);
    EXPECT_THROW(parse_edge_list("vertices: a,a\n"), ParseError);
    EXPECT_THROW(read_edge_list("/nonexistent/graph"), IoError);
}

TEST(Csv, RoundTripIsExact) {
    Dataset d;
    d.columns = {"x", "y"};
    d.rows.resize(3, 2);
    d.rows << 0.1, -2.5e-300, 1.0 / 3.0, 7, -0.0, 123456789.125;
    const auto back = parse_csv(format_csv(d));
    EXPECT_EQ(back.columns, d.columns);
    EXPECT_EQ(back.rows, d.rows);
}

TEST(Csv, Errors) {
    EXPECT_THROW(parse_csv("a,b\n1,\n"), ParseError);
    EXPECT_THROW(parse_csv("a,b\n1,x\n"), ParseError);
    EXPECT_THROW(parse_csv("a,b\n1,2,3\n"), ParseError);
    EXPECT_THROW(parse_csv(""), ParseError);
    EXPECT_THROW(parse_csv("a,a\n1,2\n"), ParseError);
    EXPECT_NO_THROW(parse_csv("a,b\r\n1,2\r\n"));
}

TEST(VertexSets, Helpers) {
    EXPECT_EQ(make_set({3, 1, 3, 2}), (VertexSet{1, 2, 3}));
    EXPECT_EQ(set_union({1, 3}, {2, 3}), (VertexSet{1, 2, 3}));
    EXPECT_EQ(set_difference({1, 2, 3}, {2}), (VertexSet{1, 3}));
    EXPECT_TRUE(set_contains({1, 4}, 4));
}
