#pragma once

// Hand-built graphs and scripted testers for the worked examples, plus
// small random-graph helpers shared by unit and acceptance tests.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "mvrcg/citest.hpp"
#include "mvrcg/criteria.hpp"
#include "mvrcg/graph.hpp"
#include "mvrcg/graph_io.hpp"
#include "mvrcg/skeleton.hpp"

namespace fixtures {

using mvrcg::MixedGraph;
using mvrcg::Ordering;
using mvrcg::Vertex;
using mvrcg::VertexSet;

inline const std::vector<std::string> abcde{"a", "b", "c", "d", "e"};

inline Vertex id(const MixedGraph& g, const std::string& label) { return g.index_of(label); }

inline VertexSet ids(const MixedGraph& g, std::initializer_list<const char*> labels) {
    std::vector<Vertex> out;
    for (const char* l : labels) out.push_back(g.index_of(l));
    return mvrcg::make_set(out);
}

inline Ordering order(const MixedGraph& g, std::initializer_list<const char*> labels) {
    Ordering out;
    for (const char* l : labels) out.push_back(g.index_of(l));
    return out;
}

inline MixedGraph graph(const std::string& body) { return mvrcg::parse_edge_list(body); }

// Five-vertex DAG whose sample misjudges two tests at level 3.
inline MixedGraph misjudged_truth() {
    return graph("vertices: a,b,c,d,e\n"
                 "a -> b\na -> c\nb -> c\nb -> d\nb -> e\nc -> d\nc -> e\nd -> e\n");
}

inline std::shared_ptr<const mvrcg::CITester> misjudged_tester() {
    const auto g = misjudged_truth();
    return std::make_shared<mvrcg::ScriptedTester>(
        g, std::vector<mvrcg::ScriptedAnswer>{
               {id(g, "a"), id(g, "e"), ids(g, {"b", "c", "d"}), true},
               {id(g, "c"), id(g, "e"), ids(g, {"a", "b", "d"}), true},
               {id(g, "a"), id(g, "e"), ids(g, {"b", "c"}), false},
           });
}

// Skeleton found with ordering (d,e,a,c,b): c--e lost.
inline MixedGraph misjudged_skeleton_order1() {
    return graph("vertices: a,b,c,d,e\na -- b\na -- c\nb -- c\nb -- d\nb -- e\nc -- d\nd -- e\n");
}

// Skeleton found with ordering (d,c,e,a,b): c--e lost, spurious a--e kept.
inline MixedGraph misjudged_skeleton_order2() {
    return graph("vertices: a,b,c,d,e\na -- b\na -- c\na -- e\nb -- c\nb -- d\nb -- e\nc -- d\nd -- e\n");
}

// DAG b->a<-c, b->d->e<-c; the sample misses c _||_ d and wrongly accepts c _||_ d | e.
inline MixedGraph sepset_truth() {
    return graph("vertices: a,b,c,d,e\nb -> a\nc -> a\nb -> d\nc -> e\nd -> e\n");
}

inline std::vector<mvrcg::ScriptedAnswer> sepset_script(const MixedGraph& g) {
    return {
        {id(g, "c"), id(g, "d"), {}, false},
        {id(g, "c"), id(g, "d"), ids(g, {"b"}), true},
        {id(g, "c"), id(g, "d"), ids(g, {"e"}), true},
    };
}

inline std::shared_ptr<const mvrcg::CITester> sepset_tester() {
    const auto g = sepset_truth();
    return std::make_shared<mvrcg::ScriptedTester>(g, sepset_script(g));
}

// Same sample, where c _||_ d | {b,e} is also accepted (three separating sets).
inline std::shared_ptr<const mvrcg::CITester> three_sepsets_tester() {
    const auto g = sepset_truth();
    auto script = sepset_script(g);
    script.push_back({id(g, "c"), id(g, "d"), ids(g, {"b", "e"}), true});
    return std::make_shared<mvrcg::ScriptedTester>(g, script);
}

// Ordering (d,c,b,a,e) records S_cd = {b}.
inline MixedGraph sepset_result_b() {
    return graph("vertices: a,b,c,d,e\nb -> a\nc -> a\nb -- d\nc -> e\nd -> e\n");
}

// Ordering (c,d,e,a,b) records S_cd = {e}.
inline MixedGraph sepset_result_e() {
    return graph("vertices: a,b,c,d,e\nb -> a\nc -> a\nb -- d\nc -- e\nd -- e\n");
}

// Two v-structures feeding the undirected edge c--d from both sides.
inline MixedGraph two_collider_graph() {
    return graph("vertices: a,b,c,d,e,f\na -> c\ne -> c\nb -> d\nf -> d\nc -- d\n");
}

// Random edge kinds over p vertices, no structural guarantees.
inline MixedGraph random_mixed(int p, double density, std::mt19937_64& rng, bool allow_undirected = true) {
    MixedGraph g = MixedGraph::with_size(p);
    std::bernoulli_distribution edge(density);
    std::uniform_int_distribution<int> kind(0, allow_undirected ? 3 : 2);
    for (Vertex u = 0; u < p; ++u)
        for (Vertex v = u + 1; v < p; ++v) {
            if (!edge(rng)) continue;
            switch (kind(rng)) {
                case 0: g.add_directed(u, v); break;
                case 1: g.add_directed(v, u); break;
                case 2: g.add_bidirected(u, v); break;
                default: g.add_undirected(u, v); break;
            }
        }
    return g;
}

// Every MVR chain graph over p vertices (directed and bidirected edges only).
template <typename Visit>
void for_each_mvr_cg(int p, Visit&& visit) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < p; ++u)
        for (Vertex v = u + 1; v < p; ++v) pairs.emplace_back(u, v);
    std::size_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 4;
    MixedGraph g = MixedGraph::with_size(p);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (const auto& [u, v] : pairs) {
            switch (c % 4) {
                case 0: g.remove_edge(u, v); break;
                case 1: g.add_directed(u, v); break;
                case 2: g.add_directed(v, u); break;
                default: g.add_bidirected(u, v); break;
            }
            c /= 4;
        }
        if (!mvrcg::has_partially_directed_cycle(g)) visit(g);
    }
}

}  // namespace fixtures
