#include "mvrcg/criteria.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace mvrcg {
namespace {

std::vector<char> mask_of(const MixedGraph& g, const VertexSet& s) {
    std::vector<char> mask(static_cast<std::size_t>(g.size()), 0);
    for (Vertex v : s) {
        g.check_vertex(v);
        mask[static_cast<std::size_t>(v)] = 1;
    }
    return mask;
}

VertexSet set_from_mask(const std::vector<char>& mask) {
    VertexSet out;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) out.push_back(static_cast<Vertex>(i));
    return out;
}

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

}  // namespace

VertexSet adjacency_set(const MixedGraph& g, Vertex v) { return g.adjacent_to(v); }

Relations relations(const MixedGraph& g, const VertexSet& a) {
    const auto in_a = mask_of(g, a);
    std::vector<char> pa(in_a.size(), 0);
    std::vector<char> ne(in_a.size(), 0);
    for (Vertex v : a) {
        for (Vertex w : g.adjacent_to(v)) {
            if (in_a[static_cast<std::size_t>(w)]) continue;
            if (g.is_directed(w, v)) pa[static_cast<std::size_t>(w)] = 1;
            if (g.is_bidirected(w, v)) ne[static_cast<std::size_t>(w)] = 1;
        }
    }
    Relations r{set_from_mask(pa), set_from_mask(ne), {}};
    r.boundary = set_union(r.parents, r.neighbors);
    return r;
}

VertexSet ancestors(const MixedGraph& g, const VertexSet& x) {
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    std::deque<Vertex> queue(x.begin(), x.end());
    for (Vertex v : x) g.check_vertex(v);
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w = 0; w < g.size(); ++w) {
            if (seen[static_cast<std::size_t>(w)] || !g.is_directed(w, v)) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            queue.push_back(w);
        }
    }
    return set_from_mask(seen);
}

VertexSet ancestral_closure(const MixedGraph& g, const VertexSet& x) {
    return set_union(ancestors(g, x), make_set(x));
}

bool has_partially_directed_cycle(const MixedGraph& g) {
    // Contract bidirected components; a partially directed cycle exists iff a
    // directed edge stays inside a component or the contracted graph has a
    // directed cycle.
    const int p = g.size();
    DisjointSets comps(p);
    const auto edges = g.edges();
    for (const Edge& e : edges)
        if (e.kind() == EdgeKind::bidirected) comps.unite(e.u, e.v);

    std::vector<std::vector<int>> out(static_cast<std::size_t>(p));
    std::vector<int> indegree(static_cast<std::size_t>(p), 0);
    for (const Edge& e : edges) {
        if (e.kind() != EdgeKind::directed) continue;
        const Vertex from = e.at_v == Mark::arrow ? e.u : e.v;
        const Vertex to = e.at_v == Mark::arrow ? e.v : e.u;
        const int cf = comps.find(from);
        const int ct = comps.find(to);
        if (cf == ct) return true;
        out[static_cast<std::size_t>(cf)].push_back(ct);
        ++indegree[static_cast<std::size_t>(ct)];
    }

    std::vector<int> ready;
    int roots = 0;
    for (int v = 0; v < p; ++v) {
        if (comps.find(v) != v) continue;
        ++roots;
        if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    }
    int visited = 0;
    while (!ready.empty()) {
        const int c = ready.back();
        ready.pop_back();
        ++visited;
        for (int d : out[static_cast<std::size_t>(c)])
            if (--indegree[static_cast<std::size_t>(d)] == 0) ready.push_back(d);
    }
    return visited != roots;
}

std::vector<VertexSet> chain_components(const MixedGraph& g) {
    if (has_partially_directed_cycle(g)) throw StructureError("graph has a partially directed cycle");
    DisjointSets comps(g.size());
    for (const Edge& e : g.edges())
        if (e.kind() != EdgeKind::directed) comps.unite(e.u, e.v);
    std::vector<VertexSet> out;
    std::vector<int> slot(static_cast<std::size_t>(g.size()), -1);
    for (Vertex v = 0; v < g.size(); ++v) {
        const int root = comps.find(v);
        if (slot[static_cast<std::size_t>(root)] < 0) {
            slot[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(v);
    }
    return out;
}

VertexSet collider_connected(const MixedGraph& g, Vertex x, const std::vector<char>& allowed) {
    g.check_vertex(x);
    const auto ok = [&](Vertex v) { return allowed.empty() || allowed[static_cast<std::size_t>(v)]; };
    std::vector<char> reached(static_cast<std::size_t>(g.size()), 0);
    // Vertices entered through an arrowhead can continue the chain as a collider.
    std::vector<char> expanded(static_cast<std::size_t>(g.size()), 0);
    std::vector<Vertex> stack;
    for (Vertex w : g.adjacent_to(x)) {
        if (!ok(w)) continue;
        reached[static_cast<std::size_t>(w)] = 1;
        if (g.has_arrowhead(w, x) && !expanded[static_cast<std::size_t>(w)]) {
            expanded[static_cast<std::size_t>(w)] = 1;
            stack.push_back(w);
        }
    }
    while (!stack.empty()) {
        const Vertex w = stack.back();
        stack.pop_back();
        for (Vertex t : g.adjacent_to(w)) {
            if (!ok(t) || !g.has_arrowhead(w, t)) continue;
            reached[static_cast<std::size_t>(t)] = 1;
            if (g.has_arrowhead(t, w) && !expanded[static_cast<std::size_t>(t)]) {
                expanded[static_cast<std::size_t>(t)] = 1;
                stack.push_back(t);
            }
        }
    }
    reached[static_cast<std::size_t>(x)] = 0;
    return set_from_mask(reached);
}

MixedGraph augmented_graph(const MixedGraph& g) {
    MixedGraph out(g.labels());
    for (Vertex x = 0; x < g.size(); ++x)
        for (Vertex y : collider_connected(g, x))
            if (x < y) out.add_undirected(x, y);
    return out;
}

void SeparationQuery::validate(const MixedGraph& g) const {
    if (x.empty() || y.empty()) throw DomainError("separation query needs nonempty X and Y");
    std::vector<int> owner(static_cast<std::size_t>(g.size()), 0);
    int tag = 0;
    for (const VertexSet* s : {&x, &y, &z}) {
        ++tag;
        for (Vertex v : *s) {
            g.check_vertex(v);
            auto& o = owner[static_cast<std::size_t>(v)];
            if (o != 0 && o != tag) throw DomainError("separation query sets overlap at '" + g.label(v) + "'");
            o = tag;
        }
    }
}

bool m_separated(const MixedGraph& g, const SeparationQuery& q) {
    q.validate(g);
    const auto anc = mask_of(g, ancestral_closure(g, set_union(set_union(make_set(q.x), make_set(q.y)), q.z)));
    const auto in_z = mask_of(g, q.z);
    const auto in_y = mask_of(g, q.y);

    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    std::deque<Vertex> queue;
    for (Vertex v : q.x) {
        seen[static_cast<std::size_t>(v)] = 1;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : collider_connected(g, v, anc)) {
            const auto i = static_cast<std::size_t>(w);
            if (seen[i] || in_z[i]) continue;
            if (in_y[i]) return false;
            seen[i] = 1;
            queue.push_back(w);
        }
    }
    return true;
}

namespace {

struct ChainSearch {
    const MixedGraph& g;
    Vertex target;
    std::vector<char> in_z;
    std::vector<char> in_an_z;
    std::vector<char> on_chain;

    bool extend(Vertex cur, Vertex prev) {
        for (Vertex next : g.adjacent_to(cur)) {
            if (on_chain[static_cast<std::size_t>(next)]) continue;
            if (prev >= 0) {
                const bool collider = g.has_arrowhead(cur, prev) && g.has_arrowhead(cur, next);
                if (collider && !in_an_z[static_cast<std::size_t>(cur)]) continue;
                if (!collider && in_z[static_cast<std::size_t>(cur)]) continue;
            }
            if (next == target) return true;
            on_chain[static_cast<std::size_t>(next)] = 1;
            if (extend(next, cur)) return true;
            on_chain[static_cast<std::size_t>(next)] = 0;
        }
        return false;
    }
};

}  // namespace

bool m_connecting_chain_exists(const MixedGraph& g, Vertex u, Vertex v, const VertexSet& z) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw DomainError("chain endpoints must differ");
    const auto in_z = mask_of(g, z);
    if (in_z[static_cast<std::size_t>(u)] || in_z[static_cast<std::size_t>(v)]) {
        throw DomainError("chain endpoints must lie outside the conditioning set");
    }
    ChainSearch search{g, v, in_z, mask_of(g, ancestral_closure(g, z)),
                       std::vector<char>(static_cast<std::size_t>(g.size()), 0)};
    search.on_chain[static_cast<std::size_t>(u)] = 1;
    return search.extend(u, -1);
}

std::vector<UnshieldedTriple> unshielded_triples(const MixedGraph& g) {
    std::vector<UnshieldedTriple> out;
    for (Vertex mid = 0; mid < g.size(); ++mid) {
        const auto adj = g.adjacent_to(mid);
        for (std::size_t i = 0; i < adj.size(); ++i)
            for (std::size_t j = i + 1; j < adj.size(); ++j)
                if (!g.adjacent(adj[i], adj[j])) out.push_back({adj[i], mid, adj[j]});
    }
    return out;
}

bool is_collider(const MixedGraph& g, const UnshieldedTriple& t) {
    return g.has_arrowhead(t.mid, t.a) && g.has_arrowhead(t.mid, t.c);
}

std::vector<UnshieldedTriple> unshielded_colliders(const MixedGraph& g) {
    auto triples = unshielded_triples(g);
    std::erase_if(triples, [&](const UnshieldedTriple& t) { return !is_collider(g, t); });
    return triples;
}

bool markov_equivalent(const MixedGraph& g, const MixedGraph& h) {
    if (g.labels() != h.labels()) throw DomainError("markov_equivalent: graphs have different vertex lists");
    return g.skeleton() == h.skeleton() && unshielded_colliders(g) == unshielded_colliders(h);
}

}  // namespace mvrcg
