#include "mvrcg/junction.hpp"

#include <algorithm>
#include <numeric>

namespace mvrcg {
namespace {

std::vector<std::vector<Vertex>> undirected_neighbours(const MixedGraph& g) {
    std::vector<std::vector<Vertex>> nb(static_cast<std::size_t>(g.size()));
    for (const Edge& e : g.edges()) {
        if (e.kind() != EdgeKind::undirected) continue;
        nb[static_cast<std::size_t>(e.u)].push_back(e.v);
        nb[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    return nb;
}

}  // namespace

std::vector<Vertex> maximum_cardinality_order(const MixedGraph& g) {
    const auto nb = undirected_neighbours(g);
    const int p = g.size();
    std::vector<int> weight(static_cast<std::size_t>(p), 0);
    std::vector<char> numbered(static_cast<std::size_t>(p), 0);
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(p));
    for (int step = 0; step < p; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < p; ++v)
            if (!numbered[static_cast<std::size_t>(v)] &&
                (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        numbered[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
        for (Vertex w : nb[static_cast<std::size_t>(best)])
            if (!numbered[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
    }
    return order;
}

JunctionTree junction_tree(const MixedGraph& g) {
    const auto nb = undirected_neighbours(g);
    const auto order = maximum_cardinality_order(g);
    const int p = g.size();
    std::vector<int> pos(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    auto earlier = [&](Vertex v) {
        VertexSet out;
        for (Vertex w : nb[static_cast<std::size_t>(v)])
            if (pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(v)]) out.push_back(w);
        return make_set(std::move(out));
    };

    JunctionTree tree;
    std::vector<int> clique_of(static_cast<std::size_t>(p), -1);
    std::size_t previous_size = 0;
    for (int i = 0; i < p; ++i) {
        const Vertex v = order[static_cast<std::size_t>(i)];
        const VertexSet sep = earlier(v);

        // Perfect elimination check: the earlier neighbours minus the latest
        // one must all be adjacent to that latest one.
        if (!sep.empty()) {
            const Vertex last = *std::max_element(sep.begin(), sep.end(), [&](Vertex a, Vertex b) {
                return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)];
            });
            for (Vertex w : sep) {
                if (w != last && !g.is_undirected(w, last)) {
                    throw StructureError("undirected part is not chordal (at '" + g.label(v) + "')");
                }
            }
        }

        if (i == 0 || sep.size() <= previous_size) {
            VertexSet clique = sep;
            clique.push_back(v);
            tree.cliques.push_back(make_set(std::move(clique)));
            int parent = -1;
            if (!sep.empty()) {
                const Vertex last = *std::max_element(sep.begin(), sep.end(), [&](Vertex a, Vertex b) {
                    return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)];
                });
                parent = clique_of[static_cast<std::size_t>(last)];
            } else if (i > 0) {
                parent = 0;
            }
            tree.parent.push_back(parent);
            tree.depth.push_back(parent < 0 ? 0 : tree.depth[static_cast<std::size_t>(parent)] + 1);
        } else {
            auto& clique = tree.cliques.back();
            clique.push_back(v);
            clique = make_set(std::move(clique));
        }
        clique_of[static_cast<std::size_t>(v)] = static_cast<int>(tree.cliques.size()) - 1;
        previous_size = sep.size();
    }
    return tree;
}

std::vector<Vertex> clique_vertex_order(const MixedGraph& g, const JunctionTree& tree) {
    std::vector<int> idx(tree.cliques.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return tree.depth[static_cast<std::size_t>(a)] < tree.depth[static_cast<std::size_t>(b)];
    });
    std::vector<char> placed(static_cast<std::size_t>(g.size()), 0);
    std::vector<Vertex> out;
    for (int c : idx) {
        for (Vertex v : tree.cliques[static_cast<std::size_t>(c)]) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            placed[static_cast<std::size_t>(v)] = 1;
            out.push_back(v);
        }
    }
    return out;
}

MixedGraph orient_remaining_undirected(const MixedGraph& essential) {
    if (!essential.has_undirected_edges()) return essential;
    const auto tree = junction_tree(essential);
    const auto order = clique_vertex_order(essential, tree);
    std::vector<int> rank(static_cast<std::size_t>(essential.size()));
    for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    MixedGraph out = essential;
    for (const Edge& e : essential.edges()) {
        if (e.kind() != EdgeKind::undirected) continue;
        if (rank[static_cast<std::size_t>(e.u)] < rank[static_cast<std::size_t>(e.v)]) out.add_directed(e.u, e.v);
        else out.add_directed(e.v, e.u);
    }
    return out;
}

}  // namespace mvrcg
